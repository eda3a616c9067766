// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rado/corpus.hpp"
#include "rado/serialize.hpp"

namespace rado {

namespace {

// ---------------------------------------------------------------------------
// Human-readable certificates

std::string join_bigs(std::span<const BigInt> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].get_str();
  return out + ")";
}

std::string join_names(std::span<const Variable> vs, const char* open = "(",
                       const char* close = ")") {
  std::string out = open;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].name();
  return out + close;
}

std::string set_of(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i] + 1);
  return out + "}";
}

template <class T>
std::string tuple_of(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ')';
  return os.str();
}

void describe(const Certificate& c, const std::string& indent, std::ostream& out) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SubsetPayload>) {
          out << indent << "a = " << join_bigs(p.coefficients) << "\n";
          out << indent << "J = " << set_of(p.subset) << ", sum of a_j over J is 0\n";
        } else if constexpr (std::is_same_v<T, NecessityPayload>) {
          out << indent << "a = " << join_bigs(p.coefficients) << ", degree " << p.degree << "\n";
          out << indent << "no nonempty J has sum of a_j equal to 0\n";
        } else if constexpr (std::is_same_v<T, AffinePayload>) {
          out << indent << "a = " << join_bigs(p.coefficients) << ", c = " << p.constant << "\n";
          if (p.diagonal_root) out << indent << "t = " << *p.diagonal_root << " solves P(t, ..., t) = 0\n";
          if (p.subset) out << indent << "J = " << set_of(*p.subset) << "\n";
        } else if constexpr (std::is_same_v<T, MultiplicativePayload>) {
          out << indent << "left " << join_names(p.left) << " with exponents "
              << join_bigs(p.left_exponents) << "\n";
          out << indent << "right " << join_names(p.right) << " with exponents "
              << join_bigs(p.right_exponents) << "\n";
          if (p.sums) {
            out << indent << "I_1 = " << set_of(p.sums->left) << ", I_2 = " << set_of(p.sums->right)
                << ", common sum " << p.sums->sum << "\n";
          } else {
            out << indent << "no nonempty I_1, I_2 with equal exponent sums\n";
          }
        } else if constexpr (std::is_same_v<T, UnitPayload>) {
          out << indent << "a = " << join_bigs(p.coefficients)
              << " sums to 0, so (1, ..., 1) is a solution\n";
        } else if constexpr (std::is_same_v<T, ProductLiftPayload>) {
          out << indent << "x = " << join_names(p.linear) << ", y = " << join_names(p.product)
              << "\n";
          out << indent;
          for (std::size_t i = 0; i < p.families.size(); ++i) {
            out << (i ? ", " : "") << "F_" << i + 1 << " = " << set_of(p.families[i]);
          }
          out << "\n" << indent << "J = " << set_of(p.subset) << "\n";
        } else if constexpr (std::is_same_v<T, NonlinearLiftPayload>) {
          out << indent << "NL = " << join_names(p.nonlinear, "{", "}")
              << ", z = " << join_names(p.remaining) << "\n";
          out << indent << "l = " << tuple_of(p.levels) << ", m = " << tuple_of(p.multiplicities)
              << "\n";
          for (std::size_t i = 0; i < p.exclusive.size(); ++i) {
            out << indent << "monomial " << i + 1 << ": x_" << i + 1 << ",j = "
                << join_names(p.exclusive[i]) << "\n";
          }
          out << indent << "J = " << set_of(p.subset) << "\n";
        } else if constexpr (std::is_same_v<T, TwoMonomialPayload>) {
          out << indent << "P = " << p.scale << " * D * (Q1 - Q2) with D = " << to_string(p.common)
              << ", Q1 = " << to_string(p.left) << ", Q2 = " << to_string(p.right) << "\n";
          if (p.difference_of_variables) out << indent << "Q1 - Q2 is a difference of two variables\n";
          if (p.reduced) {
            out << indent << "Q1 - Q2: " << to_string(p.reduced->theorem) << "\n";
            describe(*p.reduced, indent + "  ", out);
          }
        } else if constexpr (std::is_same_v<T, NegationPayload>) {
          out << indent << "signs:";
          for (const auto& [v, s] : p.signs) out << ' ' << v.name() << (s > 0 ? "->+" : "->-");
          out << "\n" << indent << "transformed: " << p.transformed << "\n";
          if (p.inner) {
            out << indent << "transformed polynomial: " << to_string(p.inner->theorem) << "\n";
            describe(*p.inner, indent + "  ", out);
          }
        }
      },
      c.payload);
}

void print_verdict(const Verdict& v, const std::string& canonical, std::ostream& out) {
  out << "polynomial   " << canonical << "\n";
  out << "status       " << to_string(v.status) << "\n";
  out << "injective    " << to_string(v.injective) << "\n";
  out << "certificate  " << to_string(v.certificate.theorem) << "\n";
  describe(v.certificate, "  ", out);
  if (!v.trace.empty()) {
    out << "trace\n";
    for (const auto& t : v.trace) out << "  " << t << "\n";
  }
  if (!v.notes.empty()) {
    out << "notes\n";
    for (const auto& n : v.notes) out << "  " << n << "\n";
  }
}

void print_witness(const Witness& w, std::ostream& out) {
  out << "witness (" << to_string(w.provenance) << ")";
  for (const auto& [v, x] : w.assignment) out << ' ' << v.name() << '=' << x;
  out << "\n  value " << w.value << ", injective " << (w.injective() ? "yes" : "no") << "\n";
  if (w.trace) {
    const auto& t = *w.trace;
    out << "  eta = " << t.eta << ", eta_i = " << join_bigs(t.eta_i) << "\n";
    for (const auto& [k, g] : t.gamma) {
      out << "  gamma_" << k.first + 1 << ',' << k.second + 1 << " = " << g << "  I = "
          << set_of(t.index_sets.at(k)) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Shared helpers

struct Inapplicable : Error {
  using Error::Error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RADO_FORGE_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string_view(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("RADO_FORGE_BUDGET", "must be a positive integer");
  }
  return kDefaultNodeBudget;
}

Ring parse_ring(const std::string& s) { return s == "Z" ? Ring::Integers : Ring::Naturals; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Witness> witnesses_for(const Polynomial& p, const std::string& method, std::uint32_t n,
                                   bool injective, std::size_t limit, std::string& used) {
  std::string m = method;
  if (m == "auto") {
    if (is_lev(p) && exclusive_variables(p) && rado_condition(p.coefficients())) {
      m = "reduct";
    } else if (classify_nonlinear(p)) {
      m = "nlp";
    } else {
      m = "brute";
    }
  }
  used = m;
  if (m == "reduct") return {lev_witness(p)};
  if (m == "nlp") {
    Trace trace;
    auto v = classify_nonlinear(p, &trace);
    if (!v) {
      std::string why = "nlp lift does not apply:";
      for (const auto& t : trace) why += "\n  " + t;
      throw Inapplicable(why);
    }
    return {nlp_witness(p, std::get<NonlinearLiftPayload>(v->certificate.payload))};
  }
  return brute_force_solutions(p, n, injective, limit);
}

// ---------------------------------------------------------------------------
// Commands

struct ClassifyArgs {
  std::string poly;
  std::string ring = "N";
  bool allow_constant = false;
  bool json = false;
  bool with_witness = false;
  bool timings = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.input = a.poly;
  Verdict v;
  std::optional<Polynomial> poly;
  if (a.allow_constant) {
    AffineForm f = parse_with_constant(a.poly);
    report.canonical = print(f);
    report.profile = profile_json(f.terms);
    if (f.constant != 0) {
      v = classify_affine(f);
    } else {
      poly = f.terms;
    }
  } else {
    poly = parse(a.poly);
  }
  if (poly) {
    report.canonical = print(*poly);
    report.profile = profile_json(*poly);
  }
  report.timings_ms["parse"] = ms_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  if (poly) v = classify(*poly, parse_ring(a.ring));
  report.timings_ms["classify"] = ms_since(t1);
  report.verdict = verdict_json(v, a.poly, report.canonical);

  std::optional<Witness> witness;
  if (a.with_witness && poly && v.status == Status::PartitionRegular && a.ring == "N") {
    const auto t2 = std::chrono::steady_clock::now();
    try {
      std::string used;
      auto ws = witnesses_for(*poly, "auto", 10, false, 1, used);
      if (!ws.empty()) witness = ws.front();
    } catch (const Error&) {
    }
    report.timings_ms["witness"] = ms_since(t2);
    if (witness) report.witness = witness_json(*witness);
  }
  if (!a.timings) report.timings_ms.clear();

  if (a.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    print_verdict(v, report.canonical, out);
    if (witness) print_witness(*witness, out);
    for (const auto& [k, ms] : report.timings_ms) out << "time " << k << " " << ms << " ms\n";
  }
  switch (v.status) {
    case Status::PartitionRegular: return exit_code::kPartitionRegular;
    case Status::NotPartitionRegular: return exit_code::kNotPartitionRegular;
    case Status::Unknown: return exit_code::kUnknown;
  }
  return exit_code::kUnknown;
}

struct WitnessArgs {
  std::string poly;
  std::string method = "auto";
  std::string ring = "N";
  std::uint32_t n = 10;
  std::size_t limit = 10;
  bool injective = false;
  bool json = false;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse(a.poly);
  std::string used;
  std::vector<Witness> ws;
  std::optional<Polynomial> via;
  try {
    if (a.ring == "Z") {
      Verdict v = classify(p, Ring::Integers);
      const auto* neg = std::get_if<NegationPayload>(&v.certificate.payload);
      if (!neg) throw Inapplicable("no sign transfer from N certifies this polynomial over Z");
      const bool flipped = std::any_of(neg->signs.begin(), neg->signs.end(),
                                       [](const auto& kv) { return kv.second < 0; });
      const Polynomial q = flipped ? negated(p) : p;
      ws = witnesses_for(q, a.method, a.n, a.injective, a.limit, used);
      if (flipped) {
        via = q;
        for (auto& w : ws) w = negate_transform(q, w).witness;
      }
    } else {
      ws = witnesses_for(p, a.method, a.n, a.injective, a.limit, used);
    }
  } catch (const Inapplicable& e) {
    err << e.what() << "\n";
    return exit_code::kInapplicable;
  } catch (const Error& e) {
    err << "method " << (used.empty() ? a.method : used) << " failed: " << e.what() << "\n";
    return exit_code::kInapplicable;
  }
  if (a.injective && used != "brute") {
    std::erase_if(ws, [](const Witness& w) { return !w.injective(); });
  }
  for (const auto& w : ws) {
    if (evaluate(p, w.assignment) != 0) throw std::logic_error("witness does not solve P");
  }

  if (a.json) {
    Json list = Json::array();
    for (const auto& w : ws) list.push_back(witness_json(w));
    Json j{{"schema", kSchemaVersion},
           {"input", a.poly},
           {"canonical", print(p)},
           {"method", used},
           {"ring", a.ring},
           {"via", via ? Json(print(*via)) : Json(nullptr)},
           {"witnesses", list}};
    out << j.dump(2) << "\n";
  } else {
    out << "polynomial   " << print(p) << "\n";
    out << "method       " << used << "\n";
    if (via) out << "via          " << print(*via) << " on N, values negated\n";
    for (const auto& w : ws) print_witness(w, out);
  }
  if (ws.empty()) {
    err << "no " << (a.injective ? "injective " : "") << "solution found";
    if (used == "brute") err << " in [1.." << a.n << "]";
    err << "\n";
    return exit_code::kInapplicable;
  }
  return 0;
}

struct SearchArgs {
  std::string poly;
  unsigned colors = 2;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> threshold;
  bool injective = false;
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  bool json = false;
};

std::string classes(const Coloring& c, unsigned colors) {
  std::string out;
  for (unsigned k = 0; k < colors; ++k) {
    std::string cls;
    for (std::uint32_t v = 1; v <= c.n; ++v) {
      if (c(v) == k) cls += (cls.empty() ? "" : ", ") + std::to_string(v);
    }
    if (!cls.empty()) out += (out.empty() ? "{" : " {") + cls + "}";
  }
  return out;
}

void print_outcome(const SearchOutcome& o, std::ostream& out) {
  out << "N = " << o.n << ": " << to_string(o.kind);
  if (o.coloring) {
    out << " [";
    for (std::size_t i = 0; i < o.coloring->colors.size(); ++i) {
      out << (i ? ", " : "") << static_cast<int>(o.coloring->colors[i]);
    }
    out << "] " << classes(*o.coloring, o.colors);
  }
  out << "  (nodes " << o.stats.nodes << ", constraints " << o.stats.constraints << ", "
      << o.stats.ms << " ms)\n";
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const Polynomial p = parse(a.poly);
  const std::string canonical = print(p);
  SearchOptions opt;
  opt.budget = a.budget ? *a.budget : default_budget();
  opt.workers = a.workers;
  if (a.n) {
    SearchOutcome o = find_bad_coloring(p, a.colors, *a.n, a.injective, opt);
    if (a.json) {
      Json j{{"schema", kSchemaVersion}};
      j.update(outcome_json(o, canonical));
      out << j.dump(2) << "\n";
    } else {
      out << "polynomial   " << canonical << "\n";
      out << "colors " << a.colors << (a.injective ? ", injective solutions" : "") << "\n";
      print_outcome(o, out);
    }
    return o.kind == OutcomeKind::Inconclusive ? exit_code::kInconclusive : 0;
  }
  ThresholdResult t = rado_number(p, a.colors, *a.threshold, a.injective, opt);
  if (a.json) {
    Json j{{"schema", kSchemaVersion}};
    j.update(threshold_json(t, canonical, a.colors, *a.threshold, a.injective));
    out << j.dump(2) << "\n";
  } else {
    out << "polynomial   " << canonical << "\n";
    out << "colors " << a.colors << (a.injective ? ", injective solutions" : "") << "\n";
    for (const auto& o : t.outcomes) print_outcome(o, out);
    if (t.threshold) {
      out << "threshold " << *t.threshold << "\n";
    } else if (t.inconclusive_at) {
      out << "inconclusive at N = " << *t.inconclusive_at << " (budget " << opt.budget << ")\n";
    } else {
      out << "no forced N up to " << *a.threshold << "\n";
    }
  }
  if (t.inconclusive_at) return exit_code::kInconclusive;
  return t.threshold ? 0 : exit_code::kThresholdNotFound;
}

struct CorpusArgs {
  std::string file;
  bool json = false;
};

int cmd_corpus_run(const CorpusArgs& a, std::ostream& out) {
  const std::string path = a.file.empty() ? default_corpus_path() : a.file;
  const auto results = run_corpus(load_corpus(path));
  const auto bad = std::count_if(results.begin(), results.end(),
                                 [](const FixtureResult& r) { return !r.ok(); });
  if (a.json) {
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back(Json{{"line", r.fixture.line},
                          {"ring", r.fixture.ring == Ring::Integers ? "Z" : "N"},
                          {"anchor", r.fixture.anchor},
                          {"expected", {{"status", to_string(r.fixture.status)},
                                        {"injective", to_string(r.fixture.injective)},
                                        {"theorem", to_string(r.fixture.theorem)}}},
                          {"verdict", verdict_json(r.verdict, r.fixture.polynomial, r.canonical)},
                          {"match", r.ok()},
                          {"mismatches", r.mismatches}});
    }
    out << Json{{"schema", kSchemaVersion},
                {"fixtures", results.size()},
                {"mismatches", bad},
                {"results", list}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.ok() ? "ok    " : "FAIL  ") << r.fixture.polynomial
          << (r.fixture.ring == Ring::Integers ? "  [Z]" : "") << "  " << to_string(r.verdict.status)
          << " " << to_string(r.verdict.injective) << " "
          << to_string(r.verdict.certificate.theorem) << "\n";
      for (const auto& m : r.mismatches) {
        out << "      line " << r.fixture.line << ": " << m << "\n";
      }
    }
    out << results.size() << " fixtures, " << bad << " mismatches\n";
  }
  return bad ? exit_code::kCorpusMismatch : 0;
}

int cmd_corpus_list(const CorpusArgs& a, std::ostream& out) {
  const std::string path = a.file.empty() ? default_corpus_path() : a.file;
  const auto fixtures = load_corpus(path);
  if (a.json) {
    Json list = Json::array();
    for (const auto& f : fixtures) {
      list.push_back(Json{{"polynomial", f.polynomial},
                          {"ring", f.ring == Ring::Integers ? "Z" : "N"},
                          {"status", to_string(f.status)},
                          {"injective", to_string(f.injective)},
                          {"theorem", to_string(f.theorem)},
                          {"anchor", f.anchor}});
    }
    out << Json{{"schema", kSchemaVersion}, {"fixtures", list}}.dump(2) << "\n";
  } else {
    for (const auto& f : fixtures) {
      out << f.polynomial << "  [" << (f.ring == Ring::Integers ? "Z" : "N") << "]  "
          << to_string(f.status) << " " << to_string(f.theorem) << "  -- " << f.anchor << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition-regularity analysis for integer polynomials", "rado-forge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rado-forge 0.1.0");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a polynomial");
  classify_cmd->add_option("poly", ca.poly, "Polynomial, e.g. \"x1 + x2 - y1*y2\"")->required();
  classify_cmd->add_option("--ring", ca.ring, "N or Z")->check(CLI::IsMember({"N", "Z"}));
  classify_cmd->add_flag("--allow-constant", ca.allow_constant,
                         "Accept a constant term and use the affine classifier");
  classify_cmd->add_flag("--with-witness", ca.with_witness, "Attach a constructed witness");
  classify_cmd->add_flag("--timings", ca.timings, "Report timings");
  classify_cmd->add_flag("--json", ca.json, "JSON output");

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand("witness", "Construct an explicit solution");
  witness_cmd->add_option("poly", wa.poly, "Polynomial")->required();
  witness_cmd->add_option("--method", wa.method, "auto, reduct, nlp or brute")
      ->check(CLI::IsMember({"auto", "reduct", "nlp", "brute"}));
  witness_cmd->add_option("--ring", wa.ring, "N or Z")->check(CLI::IsMember({"N", "Z"}));
  witness_cmd->add_option("--N", wa.n, "Brute-force bound")->check(CLI::Range(1u, 1u << 30));
  witness_cmd->add_option("--limit", wa.limit, "Maximum number of brute-force solutions")
      ->check(CLI::PositiveNumber);
  witness_cmd->add_flag("--injective", wa.injective, "Require pairwise distinct values");
  witness_cmd->add_flag("--json", wa.json, "JSON output");

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Search colorings of [1..N]");
  search_cmd->add_option("poly", sa.poly, "Polynomial")->required();
  search_cmd->add_option("--colors", sa.colors, "Number of colors")
      ->required()
      ->check(CLI::Range(1u, 255u));
  auto* n_opt = search_cmd->add_option("--N", sa.n, "Search colorings of [1..N]")
                    ->check(CLI::Range(1u, 1u << 20));
  auto* t_opt = search_cmd->add_option("--threshold", sa.threshold,
                                       "Smallest forced N up to this bound")
                    ->check(CLI::Range(1u, 1u << 20));
  n_opt->excludes(t_opt);
  search_cmd->add_flag("--injective", sa.injective, "Only pairwise distinct solutions");
  search_cmd->add_option("--budget", sa.budget, "Node budget (default RADO_FORGE_BUDGET or 5e7)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--workers", sa.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  search_cmd->add_flag("--json", sa.json, "JSON output");

  CorpusArgs cra;
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled fixture corpus");
  corpus_cmd->require_subcommand(1);
  auto* run_cmd = corpus_cmd->add_subcommand("run", "Classify every fixture and diff");
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List fixtures");
  for (auto* c : {run_cmd, list_cmd}) {
    c->add_option("--file", cra.file, "Corpus file (default: bundled)");
    c->add_flag("--json", cra.json, "JSON output");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (search_cmd->parsed() && !sa.n && !sa.threshold) {
      throw CLI::RequiredError("--N or --threshold");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(ca, out);
    if (witness_cmd->parsed()) return cmd_witness(wa, out, err);
    if (search_cmd->parsed()) return cmd_search(sa, out);
    if (run_cmd->parsed()) return cmd_corpus_run(cra, out);
    if (list_cmd->parsed()) return cmd_corpus_list(cra, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const ConstantTermError& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const EmptyPolynomial& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const CorpusError& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const SearchSpaceTooLarge& e) {
    err << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
  return exit_code::kUsage;
}

}  // namespace rado
