#include "slender/gp.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <set>
#include <stdexcept>

namespace slender {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in power");
  return r;
}

// Weight used to pick minimal conjugators in pivot: the Dudley norm where
// one exists, the shorter residue direction for Z/n.
long long syllable_weight(const VertexGroup& g, VElem e) {
  if (g.has_norm()) return g.norm(e);
  const VElem r = g.canon(e);
  return std::min(r, g.modulus() - r);
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupContext

ContextPtr GroupContext::make(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges,
                              std::vector<VertexGroup> groups) {
  CommutationGraph graph(std::move(vertices), std::move(edges));
  if (groups.empty()) groups.assign(graph.size(), VertexGroup::integers());
  if (groups.size() != graph.size())
    throw std::invalid_argument("one vertex group per vertex required");
  return ContextPtr(new GroupContext(std::move(graph), std::move(groups)));
}

ContextPtr GroupContext::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("group file: top level must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "vertices" && item.key() != "edges" && item.key() != "vertex_groups")
      throw std::invalid_argument("group file: unknown key \"" + item.key() + "\"");
  if (!doc.contains("vertices") || !doc.contains("edges"))
    throw std::invalid_argument("group file: \"vertices\" and \"edges\" are required");

  std::vector<std::string> vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_string()) throw std::invalid_argument("group file: vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("group file: each edge must be a pair of vertex names");
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  std::vector<VertexGroup> groups(vertices.size(), VertexGroup::integers());
  if (doc.contains("vertex_groups")) {
    const auto& vg = doc.at("vertex_groups");
    if (!vg.is_object()) throw std::invalid_argument("group file: vertex_groups must be an object");
    for (const auto& item : vg.items()) {
      bool found = false;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == item.key()) {
          groups[i] = VertexGroup::from_tag(item.value().get<std::string>());
          found = true;
        }
      if (!found)
        throw std::invalid_argument("group file: vertex_groups names unknown vertex \"" +
                                    item.key() + "\"");
    }
  }
  return make(std::move(vertices), std::move(edges), std::move(groups));
}

ContextPtr GroupContext::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file \"" + path + "\"");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("group file \"" + path + "\": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json GroupContext::to_json() const {
  nlohmann::json doc;
  doc["vertices"] = graph_.vertices();
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : graph_.edges())
    edges.push_back({graph_.vertex_name(static_cast<std::size_t>(a)),
                     graph_.vertex_name(static_cast<std::size_t>(b))});
  doc["edges"] = edges;
  nlohmann::json vg;
  for (std::size_t i = 0; i < size(); ++i) vg[graph_.vertex_name(i)] = groups_[i].tag();
  doc["vertex_groups"] = vg;
  return doc;
}

bool GroupContext::all_vertex_groups_normed() const {
  for (const auto& g : groups_)
    if (!g.has_norm()) return false;
  return true;
}

bool GroupContext::same_structure(const GroupContext& other) const {
  return graph_ == other.graph_ && groups_ == other.groups_;
}

// ---------------------------------------------------------------------------
// Reduction and canonical form

namespace {

bool syllables_commute(const GroupContext& ctx, const Syllable& a, const Syllable& b) {
  return a.vertex != b.vertex && ctx.graph().adjacent(a.vertex, b.vertex);
}

// Finds a same-vertex pair (i, j) that admits a split point per Green's
// second condition and merges it; returns false when the word is reduced.
bool merge_one_pair(const GroupContext& ctx, Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i].vertex != w[j].vertex) continue;
      // Largest k1 with w[i] commuting across (i, k1].
      int k1 = i;
      while (k1 + 1 < j && syllables_commute(ctx, w[i], w[k1 + 1])) ++k1;
      // Smallest k2 with w[j] commuting across [k2, j).
      int k2 = j;
      while (k2 - 1 > i && syllables_commute(ctx, w[k2 - 1], w[j])) --k2;
      if (k2 - 1 > k1) continue;  // no admissible split point
      const int k = std::max(i, k2 - 1);
      const VertexGroup& vg = ctx.group(w[i].vertex);
      const VElem merged = vg.multiply(w[i].element, w[j].element);
      Word next;
      next.reserve(w.size() - 1);
      next.insert(next.end(), w.begin(), w.begin() + i);
      next.insert(next.end(), w.begin() + i + 1, w.begin() + k + 1);
      if (!vg.is_identity(merged)) next.push_back({w[i].vertex, merged});
      next.insert(next.end(), w.begin() + k + 1, w.begin() + j);
      next.insert(next.end(), w.begin() + j + 1, w.end());
      w = std::move(next);
      return true;
    }
  }
  return false;
}

void reduce_in_place(const GroupContext& ctx, Word& w) {
  while (merge_one_pair(ctx, w)) {
  }
}

// Greedy Foata-style emission: repeatedly output the front-movable
// syllable of least vertex index. In a reduced word at most one syllable
// per vertex is front-movable, so the choice is unique.
Word canonical_order(const GroupContext& ctx, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    int best = -1;
    for (int t = 0; t < static_cast<int>(w.size()); ++t) {
      bool movable = true;
      for (int s = 0; s < t && movable; ++s)
        movable = syllables_commute(ctx, w[s], w[t]);
      if (movable && (best < 0 || w[t].vertex < w[best].vertex)) best = t;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

bool is_reduced_word(const GroupContext& ctx, const Word& w) {
  Word copy = w;
  return !merge_one_pair(ctx, copy);
}

GPElement normalize(const ContextPtr& ctx, Word raw) {
  if (!ctx) throw std::invalid_argument("null group context");
  Word w;
  w.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.vertex < 0 || s.vertex >= static_cast<int>(ctx->size()))
      throw std::invalid_argument("syllable vertex index out of range");
    const VertexGroup& vg = ctx->group(s.vertex);
    const VElem e = vg.canon(s.element);
    if (!vg.is_identity(e)) w.push_back({s.vertex, e});
  }
  reduce_in_place(*ctx, w);
  w = canonical_order(*ctx, w);
  assert(is_reduced_word(*ctx, w));
  return GPElement(ctx, std::move(w));
}

GPElement identity(const ContextPtr& ctx) { return normalize(ctx, {}); }

// ---------------------------------------------------------------------------
// Parsing and printing

GPElement parse_element(const ContextPtr& ctx, std::string_view text) {
  if (!ctx) throw std::invalid_argument("null group context");
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::invalid_argument("empty element string");
  if (tokens.size() == 1 && tokens[0] == "e") return identity(ctx);

  Word raw;
  for (const std::string& tok : tokens) {
    if (tok == "e")
      throw std::invalid_argument("bad token \"e\": identity cannot appear inside a word");
    const auto caret = tok.find('^');
    const std::string name = tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
      const std::string digits = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad token \"" + tok + "\": malformed exponent");
      }
    }
    const int v = ctx->graph().find_vertex(name);
    if (v < 0) throw std::invalid_argument("bad token \"" + tok + "\": unknown vertex");
    raw.push_back({v, exp});
  }
  return normalize(ctx, raw);
}

std::string GPElement::str() const {
  if (syls_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < syls_.size(); ++i) {
    if (i) out += ' ';
    out += ctx_->graph().vertex_name(static_cast<std::size_t>(syls_[i].vertex));
    if (syls_[i].element != 1) out += "^" + std::to_string(syls_[i].element);
  }
  return out;
}

std::string to_string(const GPElement& a) { return a.str(); }

bool GPElement::operator==(const GPElement& other) const {
  if (ctx_ == other.ctx_) return syls_ == other.syls_;
  if (!ctx_ || !other.ctx_) return false;
  return ctx_->same_structure(*other.ctx_) && syls_ == other.syls_;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

const ContextPtr& common_context(const GPElement& a, const GPElement& b) {
  if (!a.context() || !b.context()) throw std::invalid_argument("detached element");
  if (a.context() != b.context() && !a.context()->same_structure(*b.context()))
    throw std::invalid_argument("graph mismatch between operands");
  return a.context();
}

}  // namespace

GPElement multiply(const GPElement& a, const GPElement& b) {
  const ContextPtr& ctx = common_context(a, b);
  Word raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return normalize(ctx, std::move(raw));
}

GPElement invert(const GPElement& a) {
  if (!a.context()) throw std::invalid_argument("detached element");
  Word raw;
  raw.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
    raw.push_back({it->vertex, a.context()->group(it->vertex).invert(it->element)});
  return normalize(a.context(), std::move(raw));
}

// ---------------------------------------------------------------------------
// Pivot decomposition

namespace {

std::vector<int> front_movable(const GroupContext& ctx, const Word& w) {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(w.size()); ++t) {
    bool movable = true;
    for (int s = 0; s < t && movable; ++s) movable = syllables_commute(ctx, w[s], w[t]);
    if (movable) out.push_back(t);
  }
  return out;
}

std::vector<int> back_movable(const GroupContext& ctx, const Word& w) {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(w.size()); ++t) {
    bool movable = true;
    for (int s = t + 1; s < static_cast<int>(w.size()) && movable; ++s)
      movable = syllables_commute(ctx, w[t], w[s]);
    if (movable) out.push_back(t);
  }
  return out;
}

struct ConjStep {
  Syllable conjugator;  // prefix gains this syllable
  int i, j;             // front / back positions being folded together
  long long weight;
  bool merged_in_front;  // conjugator was y^-1: merged syllable lands in front
};

}  // namespace

PivotForm pivot(const GPElement& a, PivotMode mode) {
  if (!a.context()) throw std::invalid_argument("detached element");
  const ContextPtr& ctx = a.context();
  GPElement prefix = identity(ctx);
  Word core = a.syllables();

  for (;;) {
    if (core.size() < 2) break;
    const auto fronts = front_movable(*ctx, core);
    const auto backs = back_movable(*ctx, core);
    std::vector<ConjStep> options;
    for (int i : fronts) {
      for (int j : backs) {
        if (i == j || core[i].vertex != core[j].vertex) continue;
        const VertexGroup& vg = ctx->group(core[i].vertex);
        const bool exact = vg.is_identity(vg.multiply(core[j].element, core[i].element));
        if (mode == PivotMode::Strict && !exact) continue;
        // Conjugating by the front syllable x sends x h y to h (y x).
        options.push_back({core[i], i, j, syllable_weight(vg, core[i].element), false});
        // Conjugating by y^-1 sends x h y to (y x) h.
        const Syllable yinv{core[j].vertex, vg.invert(core[j].element)};
        options.push_back({yinv, i, j, syllable_weight(vg, yinv.element), true});
      }
    }
    if (options.empty()) break;
    const ConjStep best = *std::min_element(
        options.begin(), options.end(), [](const ConjStep& x, const ConjStep& y) {
          return std::tie(x.weight, x.conjugator) < std::tie(y.weight, y.conjugator);
        });

    const VertexGroup& vg = ctx->group(best.conjugator.vertex);
    const VElem merged = vg.multiply(core[best.j].element, core[best.i].element);
    Word h;
    h.reserve(core.size());
    if (best.merged_in_front && !vg.is_identity(merged))
      h.push_back({best.conjugator.vertex, merged});
    for (int t = 0; t < static_cast<int>(core.size()); ++t)
      if (t != best.i && t != best.j) h.push_back(core[t]);
    if (!best.merged_in_front && !vg.is_identity(merged))
      h.push_back({best.conjugator.vertex, merged});

    prefix = multiply(prefix, normalize(ctx, {best.conjugator}));
    core = normalize(ctx, std::move(h)).syllables();
  }

  PivotForm out{prefix, normalize(ctx, std::move(core))};
  assert(multiply(out.prefix, multiply(out.core, invert(out.prefix))) == a);
  return out;
}

bool is_cyclically_reduced(const GPElement& a) {
  if (!a.context()) throw std::invalid_argument("detached element");
  const Word& w = a.syllables();
  if (w.size() < 2) return true;
  const auto fronts = front_movable(*a.context(), w);
  const auto backs = back_movable(*a.context(), w);
  for (int i : fronts)
    for (int j : backs)
      if (i != j && w[i].vertex == w[j].vertex) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Powers

namespace {

bool pairwise_commuting(const GroupContext& ctx, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!syllables_commute(ctx, w[i], w[j])) return false;
  return true;
}

}  // namespace

GPElement power(const GPElement& a, long long n) {
  if (!a.context()) throw std::invalid_argument("detached element");
  const ContextPtr& ctx = a.context();
  if (n == 0) return identity(ctx);
  if (n < 0) return power(invert(a), -n);
  if (n == 1) return a;

  const PivotForm pf = pivot(a);
  const Word& core = pf.core.syllables();
  GPElement core_power = identity(ctx);
  if (pairwise_commuting(*ctx, core)) {
    Word raw;
    raw.reserve(core.size());
    for (const Syllable& s : core) {
      const VertexGroup& vg = ctx->group(s.vertex);
      raw.push_back({s.vertex, vg.is_integers() ? checked_mul(s.element, n)
                                                : vg.canon(s.element * (n % vg.modulus()))});
    }
    core_power = normalize(ctx, std::move(raw));
  } else {
    if (n > 2'000'000 || checked_mul(n, static_cast<long long>(core.size())) > 2'000'000)
      throw std::overflow_error("power: non-abelian core with oversized exponent");
    Word raw;
    raw.reserve(core.size() * static_cast<std::size_t>(n));
    for (long long t = 0; t < n; ++t) raw.insert(raw.end(), core.begin(), core.end());
    core_power = normalize(ctx, std::move(raw));
    // Concatenated copies of a cyclically reduced non-abelian core stay reduced.
    assert(core_power.syllables().size() == core.size() * static_cast<std::size_t>(n));
  }
  return multiply(pf.prefix, multiply(core_power, invert(pf.prefix)));
}

// ---------------------------------------------------------------------------
// sigma and balls

std::vector<VElem> sigma(const GPElement& a) {
  if (!a.context()) throw std::invalid_argument("detached element");
  const GroupContext& ctx = *a.context();
  std::vector<VElem> out(ctx.size(), 0);
  for (const Syllable& s : a.syllables())
    out[static_cast<std::size_t>(s.vertex)] =
        ctx.group(s.vertex).multiply(out[static_cast<std::size_t>(s.vertex)], s.element);
  return out;
}

bool in_sigma_kernel(const GPElement& a) {
  const auto comps = sigma(a);
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (!a.context()->group(static_cast<int>(v)).is_identity(comps[v])) return false;
  return true;
}

namespace {

long long word_norm(const GroupContext& ctx, const Word& w) {
  long long total = 0;
  for (const Syllable& s : w) total += ctx.group(s.vertex).norm(s.element);
  return total;
}

std::vector<GPElement> compute_ball(const ContextPtr& ctx, long long radius) {
  for (std::size_t v = 0; v < ctx->size(); ++v)
    if (!ctx->group(static_cast<int>(v)).has_norm())
      throw std::invalid_argument("ball requires every vertex group to provide a norm and "
                                  "norm-one generators; " +
                                  ctx->group(static_cast<int>(v)).tag() + " does not");
  std::vector<Word> generators;
  for (std::size_t v = 0; v < ctx->size(); ++v)
    for (VElem g : ctx->group(static_cast<int>(v)).generators_of_norm_one())
      generators.push_back({{static_cast<int>(v), g}});

  std::set<Word> seen;
  std::deque<Word> queue;
  seen.insert(Word{});
  queue.push_back(Word{});
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (const Word& g : generators) {
      Word raw = cur;
      raw.insert(raw.end(), g.begin(), g.end());
      Word next = normalize(ctx, std::move(raw)).syllables();
      if (word_norm(*ctx, next) > radius) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  std::vector<GPElement> out;
  out.reserve(seen.size());
  for (const Word& w : seen) out.push_back(normalize(ctx, w));
  std::sort(out.begin(), out.end(), [&](const GPElement& x, const GPElement& y) {
    const long long nx = word_norm(*ctx, x.syllables());
    const long long ny = word_norm(*ctx, y.syllables());
    if (nx != ny) return nx < ny;
    return x.str() < y.str();
  });
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<GPElement>> GroupContext::ball_cache(long long radius) const {
  {
    std::lock_guard<std::mutex> lk(ball_mutex_);
    auto it = balls_.find(radius);
    if (it != balls_.end()) return it->second;
  }
  auto computed = std::make_shared<const std::vector<GPElement>>(
      compute_ball(shared_from_this(), radius));
  std::lock_guard<std::mutex> lk(ball_mutex_);
  return balls_.emplace(radius, computed).first->second;
}

std::vector<GPElement> ball(const ContextPtr& ctx, long long radius) {
  if (!ctx) throw std::invalid_argument("null group context");
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  return *ctx->ball_cache(radius);
}

}  // namespace slender
