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

#include "rhdist/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rhdist/error.hpp"
#include "rhdist/rh.hpp"

namespace rhdist {
namespace {

// Snaps floating values that land within this distance of an integer, so
// that 1 / (1/3) counts as exactly 3.
constexpr double kSnap = 1e-9;

std::string pair_text(Degree n, Degree m) {
  return "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

}  // namespace

double rh_complete_complete(Degree n, Degree m) {
  if (n < 3 || m < n) throw ParameterError("RH(K_n, K_m) requires 3 <= n <= m, got " + pair_text(n, m));
  return static_cast<double>(m - n) / static_cast<double>(n);
}

double complete_cycle_lower_breakpoint(Degree n) {
  const double x = static_cast<double>(n);
  return (x * x - 3 * x + std::sqrt(x * x * x * x + 2 * x * x * x - 11 * x * x)) / (4 * x - 10);
}

double complete_cycle_upper_breakpoint(Degree n) {
  const double x = static_cast<double>(n);
  return (x * x - 3 * x + std::sqrt(x * x * x * x - 4 * x * x * x + 7 * x * x)) / (x - 1);
}

std::vector<CompleteCycleCase> complete_cycle_cases(Degree n, Degree m) {
  std::vector<CompleteCycleCase> out;
  if (n < 3 || m < 3) return out;
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double lower = complete_cycle_lower_breakpoint(n);
  const double upper = complete_cycle_upper_breakpoint(n);
  const double middle = 1.0 - 3.0 * md / (nd + nd * md - md);

  if (md < lower) out.push_back({1, nd / md - 1.0});
  if (lower <= md && m <= n) out.push_back({2, middle});
  if (n >= 5 && n < m && md <= upper) out.push_back({3, middle});
  if (upper < md && m <= 2 * n) out.push_back({4, md / nd - 1.0});
  if (m > 2 * n) out.push_back({5, 3.0 * md / (nd + md) - 1.0});
  return out;
}

double rh_complete_cycle(Degree n, Degree m) {
  if (n < 3 || m < 3) throw ParameterError("RH(K_n, C_m) requires n, m >= 3, got " + pair_text(n, m));
  const auto cases = complete_cycle_cases(n, m);
  if (cases.empty()) {
    throw ParameterError("formula coverage: no K_n vs C_m case applies at " + pair_text(n, m));
  }
  return cases.front().value;
}

double max_rh(Degree n, Degree m) {
  if (n < 2 || m < n) throw ParameterError("max_rh requires 2 <= n <= m, got " + pair_text(n, m));
  const double md = static_cast<double>(m);
  if (n == 2) return md / 2.0 - 1.0;
  if (m == 3) return 2.0 / 7.0;
  return md * md / (2.0 * md + 1.0) - 1.0;
}

double normalized_ratio(const Ccdh& f, const Ccdh& g) {
  const Degree n = std::min(f.vertex_count(), g.vertex_count());
  const Degree m = std::max(f.vertex_count(), g.vertex_count());
  const double bound = max_rh(n, m);
  const double d = smooth_rh_distance(f, g);
  if (bound == 0.0) return 0.0;
  return d / bound;
}

StarPerturbation star_perturbation_values(Degree n) {
  if (n < 5) throw ParameterError("star-degreed perturbation values require n >= 5");
  return {2.0 / 5.0, 2.0 / (2.0 * static_cast<double>(n) + 1.0), 0.5, 2.0 / 3.0};
}

DensityPair density_pair(double c, int i) {
  if (!(c > 0.0 && c <= 0.5)) throw ParameterError("density construction requires c in (0, 1/2]");
  if (i < 1) throw ParameterError("density sequence index starts at 1");

  const double inv = 1.0 / c;
  const auto k = static_cast<Degree>(std::floor(inv + kSnap));
  double delta = inv - static_cast<double>(k);
  if (delta < kSnap) delta = 0.0;

  Degree n = 2 * k + 4;
  if (n % 2 == 0) ++n;
  for (int found = 0;; n += 2) {
    const auto parity = static_cast<Degree>(std::ceil(c * delta * static_cast<double>(n) - kSnap));
    if (parity % 2 != 0) continue;
    const Degree r =
        static_cast<Degree>(std::floor(static_cast<double>(k) * static_cast<double>(n) /
                                           (static_cast<double>(k) + delta) +
                                       kSnap)) -
        1;
    // r-regular on n vertices needs r * n even; n is odd, so r must be.
    if ((r * n) % 2 != 0) continue;
    if (++found == i) {
      std::vector<Count> fv(static_cast<std::size_t>(n - 1), 1);
      std::fill_n(fv.begin(), k - 1, n);
      const double nd = static_cast<double>(n);
      const double tau =
          (static_cast<double>(r - k + 1) * nd - 1.0) / (static_cast<double>(k) * nd + 1.0);
      return DensityPair{Ccdh(std::move(fv)),
                         Ccdh(std::vector<Count>(static_cast<std::size_t>(r), n)), tau, n, r, k};
    }
  }
}

}  // namespace rhdist
