// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Fixture corpus: one polynomial per line with its expected classification.
//
//   poly | ring | status | injective | theorem | anchor
//
// '#' starts a comment line. ring is N or Z.

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "rado/classifier.hpp"

namespace rado {

struct Fixture {
  std::string polynomial;
  Ring ring = Ring::Naturals;
  Status status = Status::Unknown;
  Injectivity injective = Injectivity::Unknown;
  Theorem theorem = Theorem::None;
  std::string anchor;
  std::size_t line = 0;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

std::vector<Fixture> parse_corpus(std::istream& in);
std::vector<Fixture> load_corpus(const std::string& path);
/// The corpus file installed with the sources.
std::string default_corpus_path();

struct FixtureResult {
  Fixture fixture;
  std::string canonical;
  Verdict verdict;
  std::vector<std::string> mismatches;  // empty when the verdict matches

  bool ok() const { return mismatches.empty(); }
};

FixtureResult run_fixture(const Fixture& f);
std::vector<FixtureResult> run_corpus(const std::vector<Fixture>& fixtures);

}  // namespace rado
