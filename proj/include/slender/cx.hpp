#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slender/equations.hpp"

namespace slender {

/// Syllable x_n^r of the amalgam, with n >= 2 and 0 < r < n.
struct CESyllable {
  long long n;
  long long r;
  auto operator<=>(const CESyllable&) const = default;
};

/// Element of the amalgam of copies of Z in which the index-n subgroup of
/// the n-th copy is identified with a single central copy generated by z
/// (so x_n^n = z for every n >= 2). Normal form: a central power z^a
/// followed by syllables with adjacent indices distinct and residues
/// strictly between 0 and n; overflow past n carries into the center.
class CEElement {
public:
  CEElement() : central_(0) {}
  CEElement(long long central, std::vector<CESyllable> word);
  static CEElement z_power(long long a) { return CEElement(a, {}); }
  /// x_n^r with the residue reduced mod n and the carry folded centrally.
  static CEElement generator(long long n, long long r = 1);

  long long central() const { return central_; }
  const std::vector<CESyllable>& word() const { return word_; }
  bool is_identity() const { return central_ == 0 && word_.empty(); }

  /// Grammar: "e" | ["z" ("^" INT)?] ("xN" ("^" INT)?)*.
  std::string str() const;

  bool operator==(const CEElement&) const = default;

private:
  long long central_;
  std::vector<CESyllable> word_;
};

CEElement ce_multiply(const CEElement& a, const CEElement& b);
CEElement ce_invert(const CEElement& a);
CEElement ce_power(const CEElement& a, long long n);
inline CEElement operator*(const CEElement& a, const CEElement& b) { return ce_multiply(a, b); }
inline CEElement pow(const CEElement& a, long long n) { return ce_power(a, n); }

CEElement parse_ce(std::string_view text);

/// Image in the free product of the cyclic groups Z/n: kill the center,
/// keep the residues. The result is already alternating-reduced.
std::vector<CESyllable> ce_quotient(const CEElement& a);
std::string quotient_str(const std::vector<CESyllable>& w);

/// Cascade system with the constant coefficient z^j.
EquationSystem<CEElement> ce_cascade_system(long long j, const std::vector<long long>& k);

/// Solves {y_m = z^j y_{m+1}^{k_m}} at every depth: with K = k_0...k_M
/// the root x_K of z gives b_m = x_K^{e_m} for the exponents of
/// cyclic_symbolic_solve, so no divisibility sequence can refute the
/// cascade at z. Requires K >= 2.
std::vector<CEElement> ce_solve_system(long long j, const std::vector<long long>& k);

}  // namespace slender
