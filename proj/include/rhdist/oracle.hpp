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

#ifndef RHDIST_ORACLE_HPP_
#define RHDIST_ORACLE_HPP_

#include "rhdist/ccdh.hpp"

namespace rhdist {

// Reference evaluators that share nothing with the linear-time sweep beyond
// smooth_eval. Both are slow on purpose.

// Least eps with box_intersects(h, {x, y, eps}), by bisection on
// [0, max(Delta(h), N(1), x, y) + 1] to absolute tolerance 1e-9. Returns the
// upper end of the final bracket. Requires x >= 1, y > 0.
double oracle_point_epsilon(double x, double y, const Ccdh& h);

// Max of oracle_point_epsilon over every integer anchor of both ccdhs.
double oracle_smooth_rh(const Ccdh& f, const Ccdh& g);

// Exact least eps for the anchor (x, y) against h, found by minimizing
//   max(|t - x| / x, |h(t) - y| / y)
// on every segment [j, j + 1], j = 1..Delta(h), in turn. O(Delta(h)).
double segment_scan_point_epsilon(double x, double y, const Ccdh& h);

// Quadratic-time smooth RH distance built on segment_scan_point_epsilon.
// This is the benchmark baseline.
double segment_scan_rh(const Ccdh& f, const Ccdh& g);

}  // namespace rhdist

#endif  // RHDIST_ORACLE_HPP_
