// Copyright 2026 The retroq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RETROQ_VERIFY_HPP
#define RETROQ_VERIFY_HPP

#include "retroq/experiments.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace retroq {

/// Deterministic per-case seed derived from a master seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
};

struct VerifyOutcome {
  std::vector<std::string> json_lines;          // one report per line
  std::map<std::string, double> min_margins;    // per report family
  std::size_t violations = 0;
  std::vector<std::string> violation_dumps;     // replay info per violating case
};

/// Samples seeded configurations across three families - single systems
/// (dims 2-4), bipartite systems (2x2, 2x3) and projective-bipartite
/// systems - and evaluates every inequality report on each.
VerifyOutcome run_verify(const VerifyConfig& config);

}  // namespace retroq

#endif  // RETROQ_VERIFY_HPP
