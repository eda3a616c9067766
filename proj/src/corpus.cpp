// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rado/corpus.hpp"

#include <fstream>
#include <sstream>

#ifndef RADO_DEFAULT_CORPUS
#define RADO_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace rado {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<Fixture> parse_corpus(std::istream& in) {
  std::vector<Fixture> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    for (std::string f; std::getline(ss, f, '|');) fields.push_back(trim(f));
    auto fail = [&](const std::string& what) {
      throw CorpusError("corpus line " + std::to_string(lineno) + ": " + what);
    };
    if (fields.size() != 6) fail("expected 6 '|'-separated fields, got " +
                                 std::to_string(fields.size()));
    Fixture fx;
    fx.polynomial = fields[0];
    if (fields[1] == "N") {
      fx.ring = Ring::Naturals;
    } else if (fields[1] == "Z") {
      fx.ring = Ring::Integers;
    } else {
      fail("ring must be N or Z, got '" + fields[1] + "'");
    }
    auto st = parse_status(fields[2]);
    if (!st) fail("unknown status '" + fields[2] + "'");
    auto inj = parse_injectivity(fields[3]);
    if (!inj) fail("unknown injectivity '" + fields[3] + "'");
    auto th = parse_theorem(fields[4]);
    if (!th) fail("unknown theorem tag '" + fields[4] + "'");
    fx.status = *st;
    fx.injective = *inj;
    fx.theorem = *th;
    fx.anchor = fields[5];
    fx.line = lineno;
    out.push_back(std::move(fx));
  }
  return out;
}

std::vector<Fixture> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

std::string default_corpus_path() { return RADO_DEFAULT_CORPUS; }

FixtureResult run_fixture(const Fixture& f) {
  FixtureResult r{f, {}, {}, {}};
  const Polynomial p = parse(f.polynomial);
  r.canonical = print(p);
  r.verdict = classify(p, f.ring);
  auto check = [&](const char* field, const std::string& want, const std::string& got) {
    if (want != got) r.mismatches.push_back(std::string(field) + ": expected " + want + ", got " + got);
  };
  check("status", to_string(f.status), to_string(r.verdict.status));
  check("injective", to_string(f.injective), to_string(r.verdict.injective));
  check("theorem", to_string(f.theorem), to_string(r.verdict.certificate.theorem));
  return r;
}

std::vector<FixtureResult> run_corpus(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureResult> out;
  out.reserve(fixtures.size());
  for (const auto& f : fixtures) out.push_back(run_fixture(f));
  return out;
}

}  // namespace rado
