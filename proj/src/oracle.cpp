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

#include "rhdist/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rhdist/rh.hpp"

namespace rhdist {

double oracle_point_epsilon(double x, double y, const Ccdh& h) {
  constexpr double kTolerance = 1e-9;
  double lo = 0.0;
  double hi = std::max({static_cast<double>(h.max_degree()),
                        static_cast<double>(h.vertex_count()), x, y}) + 1.0;
  if (box_intersects(h, RhBox{x, y, 0.0})) return 0.0;
  while (hi - lo > kTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (box_intersects(h, RhBox{x, y, mid})) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double oracle_smooth_rh(const Ccdh& f, const Ccdh& g) {
  double eps = 0.0;
  for (Degree d = 1; d <= f.max_degree(); ++d) {
    eps = std::max(eps, oracle_point_epsilon(static_cast<double>(d),
                                             static_cast<double>(f[d]), g));
  }
  for (Degree d = 1; d <= g.max_degree(); ++d) {
    eps = std::max(eps, oracle_point_epsilon(static_cast<double>(d),
                                             static_cast<double>(g[d]), f));
  }
  return eps;
}

double segment_scan_point_epsilon(double x, double y, const Ccdh& h) {
  double best = std::numeric_limits<double>::infinity();
  for (Degree j = 1; j <= h.max_degree(); ++j) {
    const double jd = static_cast<double>(j);
    const double a = static_cast<double>(h[j]);
    const double slope = static_cast<double>(h[j + 1]) - a;
    auto cost = [&](double t) {
      const double ht = a + (t - jd) * slope;
      return std::max(std::abs(t - x) / x, std::abs(ht - y) / y);
    };
    // The cost is convex and piecewise linear in t; its minimum on the
    // segment sits at an endpoint, a kink, or a crossing of the two terms.
    double local = std::min(cost(jd), cost(jd + 1.0));
    auto consider = [&](double t) {
      if (t >= jd && t <= jd + 1.0) local = std::min(local, cost(t));
    };
    consider(x);
    if (slope != 0.0) consider(jd + (y - a) / slope);
    // s1 (t - x) / x = s2 (a + (t - j) slope - y) / y
    for (const double s1 : {1.0, -1.0}) {
      for (const double s2 : {1.0, -1.0}) {
        const double coef = s1 / x - s2 * slope / y;
        if (coef == 0.0) continue;
        consider((s1 + s2 * (a - jd * slope - y) / y) / coef);
      }
    }
    best = std::min(best, local);
  }
  return best;
}

double segment_scan_rh(const Ccdh& f, const Ccdh& g) {
  double eps = 0.0;
  for (Degree d = 1; d <= f.max_degree(); ++d) {
    eps = std::max(eps, segment_scan_point_epsilon(static_cast<double>(d),
                                                   static_cast<double>(f[d]), g));
  }
  for (Degree d = 1; d <= g.max_degree(); ++d) {
    eps = std::max(eps, segment_scan_point_epsilon(static_cast<double>(d),
                                                   static_cast<double>(g[d]), f));
  }
  return eps;
}

}  // namespace rhdist
