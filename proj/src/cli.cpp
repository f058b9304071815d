#include "slender/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slender/brute.hpp"
#include "slender/cx.hpp"
#include "slender/equations.hpp"
#include "slender/gp.hpp"
#include "slender/hawaiian.hpp"
#include "slender/norms.hpp"
#include "slender/roots.hpp"
#include "slender/suite.hpp"
#include "slender/witness.hpp"

namespace slender {

namespace {

std::vector<long long> parse_csv(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer list entry \"" + item + "\"");
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

nlohmann::json parse_inline_json(const std::string& text) {
  try {
    if (!text.empty() && text[0] == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw std::invalid_argument("cannot open \"" + text.substr(1) + "\"");
      return nlohmann::json::parse(in);
    }
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON argument: ") + e.what());
  }
}

EquationSystem<GPElement> parse_system(const ContextPtr& ctx, const std::string& text) {
  const nlohmann::json doc = parse_inline_json(text);
  if (!doc.is_object() || !doc.contains("k"))
    throw std::invalid_argument("system descriptor needs a \"k\" array");
  std::vector<long long> k;
  for (const auto& km : doc.at("k")) k.push_back(km.get<long long>());
  if (doc.contains("g")) {
    const long long j = doc.value("j", 1LL);
    return constant_system(parse_element(ctx, doc.at("g").get<std::string>()), j, k);
  }
  if (doc.contains("a")) {
    EquationSystem<GPElement> sys;
    for (const auto& a : doc.at("a"))
      sys.coefficients.push_back(parse_element(ctx, a.get<std::string>()));
    sys.exponents = k;
    sys.validate();
    return sys;
  }
  throw std::invalid_argument("system descriptor needs \"g\" (with \"j\") or \"a\"");
}

struct CliState {
  CliState(std::ostream& out_stream, std::ostream& err_stream)
      : out(out_stream), err(err_stream) {}
  std::ostream& out;
  std::ostream& err;
  std::string group_file;
  bool json = false;
  long long radius = 3;
  long long nmax = 5;
  long long level = 0;
  unsigned seed = 20240801;
  std::function<int()> action;

  // per-subcommand option storage
  std::string elem_a, elem_b, g_text, b0_text, k_text, system_text, fixture_text, word_text;
  std::string method = "dudley", which_norm = "dudley", only_text;
  std::vector<std::string> sol_texts, xs;
  long long n = 1, j = 1, m = 0, terms = 8, depth = 3;

  ContextPtr group() const {
    if (group_file.empty()) throw std::invalid_argument("--group FILE is required here");
    return GroupContext::load_file(group_file);
  }
  void emit(const nlohmann::json& doc, const std::string& text) {
    if (json)
      out << doc.dump() << "\n";
    else
      out << text << "\n";
  }
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("--group", st.group_file, "group file (JSON)");
  cmd->add_flag("--json", st.json, "canonical JSON output");
  cmd->add_option("--radius", st.radius, "search/ball radius");
  cmd->add_option("--nmax", st.nmax, "power-clause bound");
  cmd->add_option("--level", st.level, "truncation level");
  cmd->add_option("--seed", st.seed, "sampling seed");
}

nlohmann::json report_json(const LengthFunctionReport& report) {
  nlohmann::json doc;
  doc["samples"] = report.samples;
  auto arr = nlohmann::json::array();
  for (const auto& v : report.violations)
    arr.push_back({{"clause", v.clause},
                   {"element", v.element},
                   {"n", v.n},
                   {"lhs", v.lhs},
                   {"rhs", v.rhs}});
  doc["violations"] = arr;
  return doc;
}

std::vector<GPElement> kernel_samples(const ContextPtr& ctx, unsigned seed, std::size_t count) {
  brute::Rng rng(seed);
  const auto pool = ball(ctx, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<GPElement> samples;
  int budget = 200000;
  while (samples.size() < count && budget-- > 0) {
    const GPElement& x = pool[pick(rng)];
    const GPElement& y = pool[pick(rng)];
    const GPElement g = multiply(multiply(x, y), multiply(invert(x), invert(y)));
    if (!g.is_identity() && syllable_length(g) <= 6) samples.insert(g);
  }
  return {samples.begin(), samples.end()};
}

// ---------------------------------------------------------------------------

void register_gp(CLI::App& app, CliState& st) {
  auto* gp = app.add_subcommand("gp", "graph-product arithmetic");
  gp->require_subcommand(1);

  auto* norm = gp->add_subcommand("normalize", "canonical reduced form");
  norm->add_option("element", st.elem_a, "raw word")->required();
  add_common(norm, st);
  norm->callback([&st] {
    st.action = [&st] {
      const GPElement e = parse_element(st.group(), st.elem_a);
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* mul = gp->add_subcommand("mul", "product of two elements");
  mul->add_option("a", st.elem_a)->required();
  mul->add_option("b", st.elem_b)->required();
  add_common(mul, st);
  mul->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const GPElement e = multiply(parse_element(ctx, st.elem_a), parse_element(ctx, st.elem_b));
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* pw = gp->add_subcommand("pow", "integer power");
  pw->add_option("a", st.elem_a)->required();
  pw->add_option("n", st.n)->required();
  add_common(pw, st);
  pw->callback([&st] {
    st.action = [&st] {
      const GPElement e = power(parse_element(st.group(), st.elem_a), st.n);
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* inv = gp->add_subcommand("inv", "inverse");
  inv->add_option("a", st.elem_a)->required();
  add_common(inv, st);
  inv->callback([&st] {
    st.action = [&st] {
      const GPElement e = invert(parse_element(st.group(), st.elem_a));
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* piv = gp->add_subcommand("pivot", "conjugate decomposition with cyclically reduced core");
  piv->add_option("a", st.elem_a)->required();
  add_common(piv, st);
  piv->callback([&st] {
    st.action = [&st] {
      const PivotForm pf = pivot(parse_element(st.group(), st.elem_a));
      st.emit({{"core", pf.core.str()}, {"prefix", pf.prefix.str()}},
              "prefix: " + pf.prefix.str() + "\ncore: " + pf.core.str());
      return 0;
    };
  });

  auto* sig = gp->add_subcommand("sigma", "per-vertex exponent image");
  sig->add_option("a", st.elem_a)->required();
  add_common(sig, st);
  sig->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const auto comps = sigma(parse_element(ctx, st.elem_a));
      nlohmann::json doc;
      std::string text;
      for (std::size_t v = 0; v < comps.size(); ++v) {
        doc[ctx->graph().vertex_name(v)] = comps[v];
        if (!text.empty()) text += ' ';
        text += ctx->graph().vertex_name(v) + ":" + std::to_string(comps[v]);
      }
      st.emit(doc, text);
      return 0;
    };
  });

  auto* bl = gp->add_subcommand("ball", "all elements of Dudley norm <= radius");
  add_common(bl, st);
  bl->callback([&st] {
    st.action = [&st] {
      const auto elements = ball(st.group(), st.radius);
      nlohmann::json arr = nlohmann::json::array();
      std::string text;
      for (const GPElement& e : elements) {
        arr.push_back(e.str());
        text += e.str() + "\n";
      }
      if (!text.empty()) text.pop_back();
      st.emit({{"count", elements.size()}, {"elements", arr}}, text);
      return 0;
    };
  });
}

void register_norm(CLI::App& app, CliState& st) {
  auto* nm = app.add_subcommand("norm", "length functions and their laws");
  nm->require_subcommand(1);

  for (const auto& [name, help] :
       std::vector<std::pair<std::string, std::string>>{
           {"dudley", "Dudley norm (sum of vertex norms)"},
           {"syllable", "syllable count"},
           {"kersigma", "syllable count, restricted to ker(sigma)"}}) {
    auto* cmd = nm->add_subcommand(name, help);
    cmd->add_option("a", st.elem_a)->required();
    add_common(cmd, st);
    const std::string tag = name;
    cmd->callback([&st, tag] {
      st.action = [&st, tag] {
        const GPElement e = parse_element(st.group(), st.elem_a);
        const long long value = tag == "dudley"      ? dudley_norm(e)
                                : tag == "syllable"  ? syllable_length(e)
                                                     : kernel_sigma_norm(e);
        st.emit({{"norm", value}}, std::to_string(value));
        return 0;
      };
    });
  }

  auto* verify = nm->add_subcommand("verify", "check the length-function and Dudley clauses");
  verify->add_option("--norm", st.which_norm, "dudley | syllable | kersigma")->required();
  add_common(verify, st);
  verify->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      NormFn fn;
      std::vector<GPElement> samples;
      if (st.which_norm == "dudley") {
        fn = [](const GPElement& x) { return dudley_norm(x); };
        samples = ball(ctx, st.radius);
      } else if (st.which_norm == "syllable") {
        fn = [](const GPElement& x) { return syllable_length(x); };
        samples = ball(ctx, st.radius);
      } else if (st.which_norm == "kersigma") {
        fn = [](const GPElement& x) { return kernel_sigma_norm(x); };
        samples = kernel_samples(ctx, st.seed, 100);
      } else {
        throw std::invalid_argument("unknown norm \"" + st.which_norm + "\"");
      }
      const auto report = verify_dudley(fn, samples, st.nmax);
      std::string text = "samples: " + std::to_string(report.samples) +
                         "\nviolations: " + std::to_string(report.violations.size());
      for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i) {
        const auto& v = report.violations[i];
        text += "\n  " + v.clause + " at [" + v.element + "] n=" + std::to_string(v.n) +
                " lhs=" + std::to_string(v.lhs) + " rhs=" + std::to_string(v.rhs);
      }
      st.emit(report_json(report), text);
      return report.ok() ? 0 : 1;
    };
  });
}

void register_roots(CLI::App& app, CliState& st) {
  auto* rt = app.add_subcommand("roots", "exact root sets");
  rt->require_subcommand(1);

  auto* find = rt->add_subcommand("find", "all (h, n) with h^n = g");
  find->add_option("g", st.elem_a)->required();
  add_common(find, st);
  find->callback([&st] {
    st.action = [&st] {
      const auto entries = roots(parse_element(st.group(), st.elem_a));
      nlohmann::json doc;
      std::string text;
      for (const auto& e : entries) {
        doc[e.base.str()] = e.exponents;
        text += e.base.str() + " :";
        for (long long n : e.exponents) text += " " + std::to_string(n);
        text += "\n";
      }
      if (!text.empty()) text.pop_back();
      st.emit(doc, text);
      return 0;
    };
  });

  auto* pb = rt->add_subcommand("pbound", "power-free bound of a finite set");
  pb->add_option("x", st.xs, "elements of the set")->required();
  add_common(pb, st);
  pb->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      std::vector<GPElement> set;
      for (const auto& s : st.xs) set.push_back(parse_element(ctx, s));
      const long long p = power_free_bound(set);
      st.emit({{"p", p}}, std::to_string(p));
      return 0;
    };
  });
}

void register_eq(CLI::App& app, CliState& st) {
  auto* eq = app.add_subcommand("eq", "equation cascades y_m = a_m y_{m+1}^{k_m}");
  eq->require_subcommand(1);

  auto* chk = eq->add_subcommand("check", "verify a solution tuple");
  chk->add_option("--system", st.system_text, "{\"g\":..,\"j\":..,\"k\":[..]} or {\"a\":[..],\"k\":[..]}")
      ->required();
  chk->add_option("--sol", st.sol_texts, "solution entries b_0 .. b_{M+1}")->required();
  add_common(chk, st);
  chk->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const auto sys = parse_system(ctx, st.system_text);
      std::vector<GPElement> sol;
      for (const auto& s : st.sol_texts) sol.push_back(parse_element(ctx, s));
      const auto outcome = check_solution(sys, sol);
      st.emit({{"ok", outcome.ok}, {"failing_index", outcome.failing_index}},
              outcome.ok ? "ok" : "fails at m = " + std::to_string(outcome.failing_index));
      return outcome.ok ? 0 : 1;
    };
  });

  auto* slv = eq->add_subcommand("solve", "bounded backward search from b_0");
  slv->add_option("--system", st.system_text)->required();
  slv->add_option("--b0", st.b0_text)->required();
  add_common(slv, st);
  slv->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const auto sys = parse_system(ctx, st.system_text);
      const auto found = bounded_solve(sys, parse_element(ctx, st.b0_text), st.radius);
      if (!found) {
        st.emit({{"solution", nullptr}}, "no-solution-within-radius");
        return 1;
      }
      nlohmann::json arr = nlohmann::json::array();
      std::string text;
      for (const GPElement& b : *found) {
        arr.push_back(b.str());
        text += b.str() + "\n";
      }
      text.pop_back();
      st.emit({{"solution", arr}}, text);
      return 0;
    };
  });

  auto* sym = eq->add_subcommand("symbolic", "cyclic-subgroup exponent solution");
  sym->add_option("--j", st.j)->required();
  sym->add_option("--k", st.k_text, "comma-separated exponents")->required();
  add_common(sym, st);
  sym->callback([&st] {
    st.action = [&st] {
      const auto e = cyclic_symbolic_solve(st.j, parse_csv(st.k_text));
      std::string text;
      for (long long em : e) text += (text.empty() ? "" : " ") + std::to_string(em);
      st.emit({{"e", e}}, text);
      return 0;
    };
  });
}

void register_wit(CLI::App& app, CliState& st) {
  auto* wt = app.add_subcommand("wit", "slenderness witnesses and refutation certificates");
  wt->require_subcommand(1);

  auto* der = wt->add_subcommand("derive", "derive a witness and print its p-sequence");
  der->add_option("--g", st.g_text)->required();
  der->add_option("--method", st.method, "dudley | roots | gp");
  der->add_option("--terms", st.terms, "p-sequence terms to print");
  der->add_option("--b0", st.b0_text, "also report the depth bound for this b_0");
  add_common(der, st);
  der->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const GPElement g = parse_element(ctx, st.g_text);
      Witness w;
      if (st.method == "dudley")
        w = dudley_witness(g);
      else if (st.method == "roots")
        w = finite_roots_witness(g, ball_enumeration(ctx, st.radius));
      else if (st.method == "gp")
        w = graph_product_witness(ctx).at(g);
      else
        throw std::invalid_argument("unknown witness method \"" + st.method + "\"");
      nlohmann::json doc;
      doc["j"] = w.j;
      doc["method"] = std::string(method_name(w.method));
      std::vector<long long> ps;
      for (long long m = 0; m < st.terms; ++m) ps.push_back(w.p(m));
      doc["p"] = ps;
      std::string text = "j: " + std::to_string(w.j) + "\nmethod: " +
                         std::string(method_name(w.method)) + "\np:";
      for (long long pm : ps) text += " " + std::to_string(pm);
      if (!st.b0_text.empty() && w.depth_bound) {
        const long long M = (*w.depth_bound)(parse_element(ctx, st.b0_text));
        doc["M"] = M;
        text += "\nM(b0): " + std::to_string(M);
      }
      st.emit(doc, text);
      return 0;
    };
  });

  auto* cert = wt->add_subcommand("certify", "emit and check a Dudley refutation certificate");
  cert->add_option("--g", st.g_text)->required();
  cert->add_option("--b0", st.b0_text)->required();
  cert->add_option("--k", st.k_text, "comma-separated k-sequence")->required();
  add_common(cert, st);
  cert->callback([&st] {
    st.action = [&st] {
      const ContextPtr ctx = st.group();
      const GPElement g = parse_element(ctx, st.g_text);
      const GPElement b0 = parse_element(ctx, st.b0_text);
      const auto c = refutation_certificate(dudley_witness(g), g, b0, parse_csv(st.k_text));
      std::string why;
      const bool checked = certificate_checks(c, &why);
      std::string text = "LB: " + std::to_string(c.LB) + " > L(b0) = " + std::to_string(c.Lb0) +
                         "\nM: " + std::to_string(c.M) + "\nvalid: " +
                         (c.valid && checked ? "true" : "false (" + why + ")");
      st.emit(certificate_json(c), text);
      return (c.valid && checked) ? 0 : 1;
    };
  });
}

void register_heg(CLI::App& app, CliState& st) {
  auto* heg = app.add_subcommand("heg", "truncated Hawaiian-earring words");
  heg->require_subcommand(1);

  auto* prj = heg->add_subcommand("project", "delete letters of index >= level, reduce");
  prj->add_option("word", st.word_text)->required();
  add_common(prj, st);
  prj->callback([&st] {
    st.action = [&st] {
      const auto t = project(parse_word(st.word_text), st.level);
      st.emit({{"level", t.level}, {"word", word_str(t.word)}}, word_str(t.word));
      return 0;
    };
  });

  auto* spl = heg->add_subcommand("split", "alternating low/high block factorization");
  spl->add_option("word", st.word_text)->required();
  spl->add_option("--m", st.m, "letter-index split point")->required();
  add_common(spl, st);
  spl->callback([&st] {
    st.action = [&st] {
      FreeWord w = parse_word(st.word_text);
      long long level = st.level;
      if (level == 0)
        for (const Letter& l : w) level = std::max(level, l.index + 1);
      const auto blocks = split_blocks({level, w}, st.m);
      nlohmann::json arr = nlohmann::json::array();
      std::string text;
      for (const auto& b : blocks) {
        arr.push_back(word_str(b));
        if (!text.empty()) text += " | ";
        text += word_str(b);
      }
      if (blocks.empty()) text = "e";
      st.emit({{"blocks", arr}}, text);
      return 0;
    };
  });

  auto* lz = heg->add_subcommand("lazy", "project a coherent lazy family U_m");
  lz->add_option("--fixture", st.fixture_text,
                 "{\"W\":[..],\"floor\":\"identity\",\"k\":[..]} or @file")
      ->required();
  lz->add_option("--m", st.m, "family index");
  add_common(lz, st);
  lz->callback([&st] {
    st.action = [&st] {
      const LazyWord lw = LazyWord::from_json(parse_inline_json(st.fixture_text));
      const auto t = lw.project(st.m, st.level);
      st.emit({{"level", t.level}, {"word", word_str(t.word)}}, word_str(t.word));
      return 0;
    };
  });
}

void register_cx(CLI::App& app, CliState& st) {
  auto* cx = app.add_subcommand("cx", "the divisible-center amalgam of copies of Z");
  cx->require_subcommand(1);

  auto* mul = cx->add_subcommand("mul", "product in carry normal form");
  mul->add_option("a", st.elem_a)->required();
  mul->add_option("b", st.elem_b)->required();
  add_common(mul, st);
  mul->callback([&st] {
    st.action = [&st] {
      const CEElement e = ce_multiply(parse_ce(st.elem_a), parse_ce(st.elem_b));
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* pw = cx->add_subcommand("pow", "integer power");
  pw->add_option("a", st.elem_a)->required();
  pw->add_option("n", st.n)->required();
  add_common(pw, st);
  pw->callback([&st] {
    st.action = [&st] {
      const CEElement e = ce_power(parse_ce(st.elem_a), st.n);
      st.emit({{"element", e.str()}}, e.str());
      return 0;
    };
  });

  auto* qt = cx->add_subcommand("quotient", "image in the free product of Z/n factors");
  qt->add_option("a", st.elem_a)->required();
  add_common(qt, st);
  qt->callback([&st] {
    st.action = [&st] {
      const auto w = ce_quotient(parse_ce(st.elem_a));
      st.emit({{"word", quotient_str(w)}}, quotient_str(w));
      return 0;
    };
  });

  auto* demo = cx->add_subcommand(
      "demo", "solve every {2,3,4}-cascade at z: no divisibility sequence refutes");
  demo->add_option("--j", st.j, "coefficient exponent (a_m = z^j)");
  demo->add_option("--depth", st.depth, "largest depth M");
  demo->add_option("--k", st.k_text, "single k-sequence instead of the sweep");
  add_common(demo, st);
  demo->callback([&st] {
    st.action = [&st] {
      std::vector<std::vector<long long>> ks;
      if (!st.k_text.empty()) {
        ks.push_back(parse_csv(st.k_text));
      } else {
        std::vector<std::vector<long long>> stack{{}};
        for (long long d = 0; d <= st.depth; ++d) {
          std::vector<std::vector<long long>> next;
          for (const auto& prefix : stack)
            for (long long km : {2, 3, 4}) {
              auto k = prefix;
              k.push_back(km);
              next.push_back(k);
              ks.push_back(k);
            }
          stack = std::move(next);
        }
      }
      bool all_ok = true;
      nlohmann::json arr = nlohmann::json::array();
      std::string text;
      for (const auto& k : ks) {
        const auto sol = ce_solve_system(st.j, k);
        const bool ok = check_solution(ce_cascade_system(st.j, k), sol).ok;
        all_ok = all_ok && ok;
        std::string kstr;
        for (long long km : k) kstr += (kstr.empty() ? "" : ",") + std::to_string(km);
        nlohmann::json entry;
        entry["k"] = k;
        entry["ok"] = ok;
        nlohmann::json solj = nlohmann::json::array();
        for (const auto& b : sol) solj.push_back(b.str());
        entry["solution"] = solj;
        arr.push_back(entry);
        text += "k=(" + kstr + ") -> " + (ok ? "solved" : "FAILED") + "\n";
      }
      text += all_ok ? "every cascade solved: no finite depth refutes at z"
                     : "some cascade failed";
      st.emit({{"all_solved", all_ok}, {"systems", arr}}, text);
      return all_ok ? 0 : 1;
    };
  });
}

void register_suite(CLI::App& app, CliState& st) {
  auto* su = app.add_subcommand("suite", "verification suite");
  su->require_subcommand(1);

  auto* run = su->add_subcommand("run", "run the property batteries");
  run->add_option("--only", st.only_text, "comma-separated criterion ids");
  add_common(run, st);
  run->callback([&st] {
    st.action = [&st] {
      SuiteOptions opt;
      opt.seed = st.seed;
      if (!st.only_text.empty())
        for (long long id : parse_csv(st.only_text)) opt.only.push_back(static_cast<int>(id));
      if (st.json) {
        std::ostringstream sink;
        const auto results = run_acceptance(opt, &sink);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
          arr.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        st.out << nlohmann::json{{"all_passed", all_passed(results)}, {"results", arr}}.dump()
               << "\n";
        return all_passed(results) ? 0 : 1;
      }
      const auto results = run_acceptance(opt, &st.out);
      st.out << (all_passed(results) ? "all criteria passed\n" : "criteria FAILED\n");
      return all_passed(results) ? 0 : 1;
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph products, Dudley norms, root sets, equation cascades and "
               "slenderness certificates"};
  app.name("slender");
  app.require_subcommand(1);
  CliState st(out, err);

  register_gp(app, st);
  register_norm(app, st);
  register_roots(app, st);
  register_eq(app, st);
  register_wit(app, st);
  register_heg(app, st);
  register_cx(app, st);
  register_suite(app, st);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!st.action) {
    err << "error: no action selected\n";
    return 2;
  }
  try {
    return st.action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace slender
