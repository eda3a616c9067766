// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// JSON views of verdicts, witnesses and search outcomes. Monomial and
// subset indices are 1-based in JSON. Integers that do not fit in 64 bits
// are written as decimal strings.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "rado/classifier.hpp"
#include "rado/search.hpp"
#include "rado/witness.hpp"

namespace rado {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json big_json(const BigInt& x);
Json certificate_json(const Certificate& c);
/// Verdict object without the schema field. `canonical` is the printed polynomial.
Json verdict_json(const Verdict& v, const std::string& input, const std::string& canonical);
Json profile_json(const Polynomial& p);
Json witness_json(const Witness& w);
Json outcome_json(const SearchOutcome& o, const std::string& polynomial);
Json threshold_json(const ThresholdResult& t, const std::string& polynomial, unsigned colors,
                    std::uint32_t max_n, bool injective);

/// Per-polynomial record emitted by `classify --json`.
struct Report {
  std::string input;
  std::string canonical;
  Json profile;
  Json verdict;
  std::optional<Json> witness;
  std::optional<Json> search;
  std::map<std::string, double> timings_ms;

  bool operator==(const Report&) const = default;
};

Json to_json(const Report& r);
/// Throws nlohmann::json::exception on malformed input, Error on a wrong schema.
Report report_from_json(const Json& j);

}  // namespace rado
