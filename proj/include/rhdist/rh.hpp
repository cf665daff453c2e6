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

#ifndef RHDIST_RH_HPP_
#define RHDIST_RH_HPP_

#include <cstdint>

#include "rhdist/ccdh.hpp"

namespace rhdist {

// Axis-aligned box of relative radius eps around (x, y):
//   [(1 - eps) x, (1 + eps) x] x [(1 - eps) y, (1 + eps) y]
struct RhBox {
  double x = 1.0;
  double y = 1.0;
  double eps = 0.0;

  double lower_x() const noexcept { return (1.0 - eps) * x; }
  double lower_y() const noexcept { return (1.0 - eps) * y; }
  double upper_x() const noexcept { return (1.0 + eps) * x; }
  double upper_y() const noexcept { return (1.0 + eps) * y; }
};

// Directional distances and their maximum.
struct RhResult {
  double forward = 0.0;   // from the first argument to the second
  double backward = 0.0;  // from the second argument to the first
  double distance = 0.0;
};

// Number of ccdh values read inside the leftward/rightward searches of the
// point-distance routine. Used to check the linear work bound.
struct WorkCounter {
  std::uint64_t loop_accesses = 0;
};

// True iff the smooth ccdh of `h`, restricted to [1, max_degree + 1], meets
// the closed box `b`, up to a relative slack of 1e-12 on each comparison so
// that boxes touching the curve test as meeting it. Requires b.x >= 1, b.y > 0.
bool box_intersects(const Ccdh& h, const RhBox& b);

// max(eps, least eps' such that the box of radius eps' around (x, y) meets
// the smooth ccdh of h). `eps` is the running maximum carried between calls.
double smooth_rh_point(Degree x, double y, const Ccdh& h, double eps);
double smooth_rh_point(Degree x, double y, const Ccdh& h, double eps, WorkCounter& work);

// Smooth directional distance: least eps such that every anchor (d, f(d)),
// d = 1..max_degree(f), has a box meeting the smooth ccdh of g.
double smooth_rh_directional(const Ccdh& f, const Ccdh& g);

// Smooth RH distance. `distance` comes from a single interleaved sweep over
// both ccdhs sharing one running eps; the directional fields come from two
// one-sided sweeps.
RhResult smooth_rh(const Ccdh& f, const Ccdh& g);
RhResult smooth_rh(const Ccdh& f, const Ccdh& g, WorkCounter& work);

// Only the interleaved sweep; what the matrix and benchmark paths use.
double smooth_rh_distance(const Ccdh& f, const Ccdh& g);
double smooth_rh_distance(const Ccdh& f, const Ccdh& g, WorkCounter& work);

// Discrete directional distance by direct double loop over integer anchors:
//   max_d min_{d' in 1..Delta(g)+1} max(|d - d'| / d, |f(d) - g(d')| / f(d))
// Quadratic; a reference definition.
double discrete_rh_directional(const Ccdh& f, const Ccdh& g);
RhResult discrete_rh(const Ccdh& f, const Ccdh& g);

}  // namespace rhdist

#endif  // RHDIST_RH_HPP_
