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

#include "rhdist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "rhdist/oracle.hpp"
#include "rhdist/rh.hpp"

namespace rhdist {
namespace {

using Clock = std::chrono::steady_clock;

// Best per-call time over several batches. Taking the minimum of 10 ms
// batches filters out timer resolution and most scheduler noise.
template <typename Fn>
double time_per_call(Fn&& fn) {
  constexpr double kBatchSeconds = 1e-2;
  constexpr int kBatches = 9;
  volatile double sink = 0.0;
  auto t0 = Clock::now();
  sink = sink + fn();
  double single = std::chrono::duration<double>(Clock::now() - t0).count();
  if (single > 0.05) return single;

  const auto reps = static_cast<long>(std::clamp(kBatchSeconds / std::max(single, 1e-9), 1.0, 1e6));
  double best = single;
  for (int batch = 0; batch < kBatches; ++batch) {
    t0 = Clock::now();
    for (long r = 0; r < reps; ++r) sink = sink + fn();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count() /
                              static_cast<double>(reps));
  }
  return best;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

Ccdh random_ccdh(Degree delta, std::mt19937_64& rng) {
  std::vector<Count> v(static_cast<std::size_t>(delta), 0);
  std::bernoulli_distribution present(0.5);
  v.back() = 1;
  for (Degree k = delta - 1; k >= 1; --k) {
    Count n = 0;
    if (present(rng)) n = std::uniform_int_distribution<Count>(1, 1 + delta / k)(rng);
    v[static_cast<std::size_t>(k - 1)] = v[static_cast<std::size_t>(k)] + n;
  }
  return Ccdh(std::move(v));
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<BenchRow> rows;
  for (const Degree size : options.sizes) {
    BenchRow row;
    row.size = size;
    std::vector<double> fast;
    std::vector<double> slow;
    for (int t = 0; t < std::max(1, options.trials); ++t) {
      const Ccdh f = random_ccdh(size, rng);
      const Ccdh g = random_ccdh(size, rng);
      const Degree sum = f.max_degree() + g.max_degree();
      WorkCounter work;
      smooth_rh_distance(f, g, work);
      row.delta_sum = std::max(row.delta_sum, sum);
      row.accesses = std::max(row.accesses, work.loop_accesses);
      row.access_ratio = std::max(row.access_ratio, static_cast<double>(work.loop_accesses) /
                                                        static_cast<double>(sum));
      fast.push_back(time_per_call([&] { return smooth_rh_distance(f, g); }));
      if (options.baseline) slow.push_back(time_per_call([&] { return segment_scan_rh(f, g); }));
    }
    row.fast_seconds = median(fast);
    if (options.baseline) row.baseline_seconds = median(slow);
    rows.push_back(row);
  }
  return rows;
}

void write_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "size\tdelta_sum\tfast_seconds\tbaseline_seconds\taccesses\taccess_ratio\n";
  char buf[64];
  for (const auto& r : rows) {
    out << r.size << '\t' << r.delta_sum << '\t';
    std::snprintf(buf, sizeof buf, "%.6e", r.fast_seconds);
    out << buf << '\t';
    if (r.baseline_seconds >= 0.0) {
      std::snprintf(buf, sizeof buf, "%.6e", r.baseline_seconds);
      out << buf;
    } else {
      out << "NA";
    }
    std::snprintf(buf, sizeof buf, "%.4f", r.access_ratio);
    out << '\t' << r.accesses << '\t' << buf << '\n';
  }
}

}  // namespace rhdist
