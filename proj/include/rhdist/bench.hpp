// Copyright 2026 The rhdist Authors
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

#ifndef RHDIST_BENCH_HPP_
#define RHDIST_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "rhdist/ccdh.hpp"

namespace rhdist {

// Random ccdh with maximum degree exactly `delta`: each degree below delta is
// present with probability 1/2, with a count uniform in [1, 1 + delta / k].
Ccdh random_ccdh(Degree delta, std::mt19937_64& rng);

struct BenchOptions {
  std::vector<Degree> sizes = {256, 512, 1024, 2048, 4096, 8192, 16384};
  int trials = 3;         // random pairs per size
  bool baseline = false;  // also time the quadratic segment scan
  std::uint64_t seed = 1;
};

struct BenchRow {
  Degree size = 0;
  Degree delta_sum = 0;            // max over trials of Delta_F + Delta_G
  double fast_seconds = 0.0;       // median over trials of the per-call minimum
  double baseline_seconds = -1.0;  // < 0 when not measured
  std::uint64_t accesses = 0;      // max over trials of search-loop accesses
  double access_ratio = 0.0;       // max over trials of accesses / (Delta_F + Delta_G)
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

// Columns: size, delta_sum, fast_seconds, baseline_seconds, accesses,
// access_ratio. Tab separated, with a header line.
void write_bench(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace rhdist

#endif  // RHDIST_BENCH_HPP_
