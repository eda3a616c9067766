// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/serialize.hpp"

namespace rado {

Json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

namespace {

Json bigs(std::span<const BigInt> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(big_json(x));
  return out;
}

Json one_based(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

Json names(std::span<const Variable> vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.name());
  return out;
}

Json payload_json(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        Json j = Json::object();
        if constexpr (std::is_same_v<T, SubsetPayload>) {
          j["coefficients"] = bigs(p.coefficients);
          j["J"] = one_based(p.subset);
        } else if constexpr (std::is_same_v<T, NecessityPayload>) {
          j["coefficients"] = bigs(p.coefficients);
          j["degree"] = p.degree;
        } else if constexpr (std::is_same_v<T, AffinePayload>) {
          j["coefficients"] = bigs(p.coefficients);
          j["constant"] = big_json(p.constant);
          j["diagonal_root"] = p.diagonal_root ? big_json(*p.diagonal_root) : Json(nullptr);
          j["J"] = p.subset ? one_based(*p.subset) : Json(nullptr);
        } else if constexpr (std::is_same_v<T, MultiplicativePayload>) {
          j["left"] = names(p.left);
          j["left_exponents"] = bigs(p.left_exponents);
          j["right"] = names(p.right);
          j["right_exponents"] = bigs(p.right_exponents);
          if (p.sums) {
            j["I1"] = one_based(p.sums->left);
            j["I2"] = one_based(p.sums->right);
            j["sum"] = big_json(p.sums->sum);
          } else {
            j["I1"] = nullptr;
            j["I2"] = nullptr;
            j["sum"] = nullptr;
          }
        } else if constexpr (std::is_same_v<T, UnitPayload>) {
          j["coefficients"] = bigs(p.coefficients);
        } else if constexpr (std::is_same_v<T, ProductLiftPayload>) {
          j["x"] = names(p.linear);
          j["y"] = names(p.product);
          Json f = Json::array();
          for (const auto& s : p.families) f.push_back(one_based(s));
          j["F"] = f;
          j["J"] = one_based(p.subset);
        } else if constexpr (std::is_same_v<T, NonlinearLiftPayload>) {
          Json ex = Json::array();
          for (const auto& xs : p.exclusive) ex.push_back(names(xs));
          j["exclusive"] = ex;
          j["NL"] = names(p.nonlinear);
          j["z"] = names(p.remaining);
          j["l"] = p.levels;
          j["m"] = p.multiplicities;
          j["J"] = one_based(p.subset);
        } else if constexpr (std::is_same_v<T, TwoMonomialPayload>) {
          j["scale"] = big_json(p.scale);
          j["D"] = to_string(p.common);
          j["Q1"] = to_string(p.left);
          j["Q2"] = to_string(p.right);
          j["difference_of_variables"] = p.difference_of_variables;
          j["reduced"] = p.reduced ? certificate_json(*p.reduced) : Json(nullptr);
        } else if constexpr (std::is_same_v<T, NegationPayload>) {
          Json s = Json::object();
          for (const auto& [v, sign] : p.signs) s[v.name()] = sign;
          j["signs"] = s;
          j["transformed"] = p.transformed;
          j["inner"] = p.inner ? certificate_json(*p.inner) : Json(nullptr);
        }
        return j;
      },
      payload);
}

}  // namespace

Json certificate_json(const Certificate& c) {
  return Json{{"theorem", to_string(c.theorem)}, {"payload", payload_json(c.payload)}};
}

Json verdict_json(const Verdict& v, const std::string& input, const std::string& canonical) {
  return Json{{"input", input},
              {"canonical", canonical},
              {"status", to_string(v.status)},
              {"injective", to_string(v.injective)},
              {"certificate", certificate_json(v.certificate)},
              {"trace", v.trace},
              {"notes", v.notes}};
}

Json profile_json(const Polynomial& p) {
  const auto prof = degree_profile(p);
  Json degree = Json::object();
  for (const auto& [v, d] : prof.degree) degree[v.name()] = d;
  return Json{{"monomials", p.size()},
              {"variables", names(p.variables())},
              {"degree", degree},
              {"partial_degree", prof.partial_degree},
              {"NL", names(prof.nonlinear)},
              {"l", prof.levels},
              {"m", prof.multiplicities},
              {"lev", is_lev(p)},
              {"homogeneous", is_homogeneous(p)}};
}

Json witness_json(const Witness& w) {
  Json a = Json::object();
  for (const auto& [v, x] : w.assignment) a[v.name()] = big_json(x);
  Json j{{"assignment", a},
         {"value", big_json(w.value)},
         {"injective", w.injective()},
         {"provenance", to_string(w.provenance)},
         {"trace", nullptr}};
  if (w.trace) {
    const auto key = [](const std::pair<std::size_t, std::size_t>& k) {
      return std::to_string(k.first + 1) + "," + std::to_string(k.second + 1);
    };
    Json gamma = Json::object(), sets = Json::object();
    for (const auto& [k, g] : w.trace->gamma) gamma[key(k)] = big_json(g);
    for (const auto& [k, s] : w.trace->index_sets) sets[key(k)] = one_based(s);
    j["trace"] = Json{{"eta", big_json(w.trace->eta)},
                      {"eta_i", bigs(w.trace->eta_i)},
                      {"gamma", gamma},
                      {"I", sets}};
  }
  return j;
}

Json outcome_json(const SearchOutcome& o, const std::string& polynomial) {
  Json coloring = nullptr;
  if (o.coloring) {
    coloring = Json::array();
    for (auto c : o.coloring->colors) coloring.push_back(static_cast<int>(c));
  }
  return Json{{"polynomial", polynomial},
              {"r", o.colors},
              {"N", o.n},
              {"injective", o.injective},
              {"outcome", to_string(o.kind)},
              {"coloring", coloring},
              {"stats", {{"nodes", o.stats.nodes},
                         {"constraints", o.stats.constraints},
                         {"ms", o.stats.ms}}}};
}

Json threshold_json(const ThresholdResult& t, const std::string& polynomial, unsigned colors,
                    std::uint32_t max_n, bool injective) {
  Json outcomes = Json::array();
  for (const auto& o : t.outcomes) outcomes.push_back(outcome_json(o, polynomial));
  return Json{{"polynomial", polynomial},
              {"r", colors},
              {"max_N", max_n},
              {"injective", injective},
              {"threshold", t.threshold ? Json(*t.threshold) : Json(nullptr)},
              {"inconclusive_at", t.inconclusive_at ? Json(*t.inconclusive_at) : Json(nullptr)},
              {"outcomes", outcomes}};
}

Json to_json(const Report& r) {
  Json j{{"schema", kSchemaVersion},
         {"input", r.input},
         {"canonical", r.canonical},
         {"profile", r.profile},
         {"verdict", r.verdict},
         {"witness", r.witness ? *r.witness : Json(nullptr)},
         {"search", r.search ? *r.search : Json(nullptr)}};
  Json t = Json::object();
  for (const auto& [k, ms] : r.timings_ms) t[k] = ms;
  j["timings_ms"] = t;
  return j;
}

Report report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw Error("unsupported report schema " + j.at("schema").dump());
  }
  Report r;
  r.input = j.at("input").get<std::string>();
  r.canonical = j.at("canonical").get<std::string>();
  r.profile = j.at("profile");
  r.verdict = j.at("verdict");
  if (!j.at("witness").is_null()) r.witness = j.at("witness");
  if (!j.at("search").is_null()) r.search = j.at("search");
  for (const auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = v.get<double>();
  return r;
}

}  // namespace rado
