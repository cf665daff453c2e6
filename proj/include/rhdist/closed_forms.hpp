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

#ifndef RHDIST_CLOSED_FORMS_HPP_
#define RHDIST_CLOSED_FORMS_HPP_

#include <vector>

#include "rhdist/ccdh.hpp"

namespace rhdist {

// RH(K_n, K_m) = (m - n) / n for 3 <= n <= m.
double rh_complete_complete(Degree n, Degree m);

// One branch of the piecewise K_n vs C_m formula whose condition holds.
struct CompleteCycleCase {
  int index = 0;  // 1..5, in the order the conditions are usually listed
  double value = 0.0;
};

// Breakpoints of the K_n vs C_m formula:
//   lower = (n^2 - 3n + sqrt(n^4 + 2n^3 - 11n^2)) / (4n - 10)
//   upper = (n^2 - 3n + sqrt(n^4 - 4n^3 + 7n^2)) / (n - 1)
double complete_cycle_lower_breakpoint(Degree n);
double complete_cycle_upper_breakpoint(Degree n);

// Every case whose stated condition holds at (n, m), conditions copied with
// their </<= orientation. Empty when (n, m) is not covered.
std::vector<CompleteCycleCase> complete_cycle_cases(Degree n, Degree m);

// RH(K_n, C_m). Throws ParameterError for n < 3 or m < 3, and a
// "formula coverage" ParameterError when no case applies.
double rh_complete_cycle(Degree n, Degree m);

// Largest RH distance between graphs (no isolated vertices) on n and m
// vertices, n <= m:
//   n = 2         : m / 2 - 1
//   n = m = 3     : 2 / 7   (the K_3 vs three-vertex path value)
//   n >= 3, m >= 4: m^2 / (2m + 1) - 1
double max_rh(Degree n, Degree m);

// smooth RH distance divided by max_rh(min size, max size), sizes being the
// vertex counts N(1). Lies in [0, 1]; 0 when the bound itself is 0.
double normalized_ratio(const Ccdh& f, const Ccdh& g);

// Star-degreed S versus S plus one pendant-pendant edge, n >= 5.
struct StarPerturbation {
  double smooth_forward = 0.0;     // S -> S*, 2/5
  double smooth_backward = 0.0;    // S* -> S, 2/(2n+1)
  double discrete_forward = 0.0;   // 1/2
  double discrete_backward = 0.0;  // 2/3
};
StarPerturbation star_perturbation_values(Degree n);

// Pair from the density construction for c in (0, 1/2]. With 1/c = k + delta
// (k integer, delta in [0, 1)) the i-th term uses the i-th odd n with
// n >= 2k + 4 and ceil(c * delta * n) even; then
//   r   = floor(k n / (k + delta)) - 1
//   f   = n repeated k - 1 times, then 1 repeated n - k times
//   g   = n repeated r times
//   tau = ((r - k + 1) n - 1) / (k n + 1)
struct DensityPair {
  Ccdh f;
  Ccdh g;
  double tau = 0.0;
  Degree n = 0;
  Degree r = 0;
  Degree k = 0;
};
DensityPair density_pair(double c, int i);

}  // namespace rhdist

#endif  // RHDIST_CLOSED_FORMS_HPP_
