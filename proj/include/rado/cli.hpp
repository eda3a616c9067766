// Copyright 2026 The rado-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes are part of the interface:
//
//   classify  0 PR, 1 NOT_PR, 2 UNKNOWN
//   witness   0 witness printed, 3 method not applicable or nothing found
//   search    0 conclusive, 1 no forced N up to the bound, 4 budget exhausted
//   corpus    0 all fixtures match, 5 some fixture differs
//   any       64 usage or parse error, 70 internal error

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rado {

namespace exit_code {
inline constexpr int kPartitionRegular = 0;
inline constexpr int kNotPartitionRegular = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kInapplicable = 3;
inline constexpr int kInconclusive = 4;
inline constexpr int kThresholdNotFound = 1;
inline constexpr int kCorpusMismatch = 5;
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;
}  // namespace exit_code

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rado
