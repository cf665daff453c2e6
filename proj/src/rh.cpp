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

#include "rhdist/rh.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace rhdist {
namespace {

constexpr double kBoxSlack = 1e-12;

inline double at(const Ccdh& h, Degree k) { return static_cast<double>(h[k]); }

// Branch conditions use exact comparisons; the returned values are the
// closed-form intersections of the ray s * (x, y) with one ccdh segment.
double point_distance(Degree xi, double y, const Ccdh& h, double eps, WorkCounter* work) {
  const double x = static_cast<double>(xi);
  const double lx = (1.0 - eps) * x;
  const double ly = (1.0 - eps) * y;
  const double rx = (1.0 + eps) * x;
  const double ry = (1.0 + eps) * y;
  const double slope = y / x;

  if (lx < 1.0 && at(h, 1) < ly) {
    // Curve starts below the box's lower edge: only shrinking ly to H(1)
    // helps.
    return 1.0 - at(h, 1) / y;
  }
  if (lx >= 1.0 && smooth_eval(h, lx) < ly) {
    // Box sits above the curve; walk left to where the ray through the
    // lower-left corner crosses it.
    auto j = static_cast<Degree>(std::ceil(lx));
    while (j > 1) {
      if (work != nullptr) ++work->loop_accesses;
      if (!(at(h, j - 1) < static_cast<double>(j - 1) * slope)) break;
      --j;
    }
    if (j == 1) return 1.0 - at(h, 1) / y;
    const double hl = at(h, j - 1);
    const double hr = at(h, j);
    const double jd = static_cast<double>(j);
    return (y + (x - jd) * hl - (x - jd + 1.0) * hr) / (y + x * (hl - hr));
  }
  if (rx < static_cast<double>(h.max_degree() + 1) && smooth_eval(h, rx) > ry) {
    // Box sits below the curve; walk right along the ray through the
    // upper-right corner.
    auto j = static_cast<Degree>(std::floor(rx));
    while (true) {
      if (work != nullptr) ++work->loop_accesses;
      if (!(at(h, j + 1) > static_cast<double>(j + 1) * slope)) break;
      ++j;
    }
    const double hl = at(h, j);
    const double hr = at(h, j + 1);
    const double jd = static_cast<double>(j);
    return ((jd + 1.0 - x) * hl + (x - jd) * hr - y) / (y + x * (hl - hr));
  }
  return eps;
}

double directional(const Ccdh& f, const Ccdh& g, WorkCounter* work) {
  double eps = 0.0;
  for (Degree d = 1; d <= f.max_degree(); ++d) {
    eps = point_distance(d, at(f, d), g, eps, work);
  }
  return eps;
}

double interleaved(const Ccdh& f, const Ccdh& g, WorkCounter* work) {
  double eps = 0.0;
  const Degree delta = std::max(f.max_degree(), g.max_degree());
  for (Degree i = 1; i <= delta; ++i) {
    if (i <= f.max_degree()) {
      [[maybe_unused]] const double before = eps;
      eps = point_distance(i, at(f, i), g, eps, work);
      assert(eps >= before - 1e-12 * std::max(1.0, before));
    }
    if (i <= g.max_degree()) {
      [[maybe_unused]] const double before = eps;
      eps = point_distance(i, at(g, i), f, eps, work);
      assert(eps >= before - 1e-12 * std::max(1.0, before));
    }
  }
  return eps;
}

RhResult full(const Ccdh& f, const Ccdh& g, WorkCounter* work) {
  RhResult r;
  r.distance = interleaved(f, g, work);
  r.forward = directional(f, g, nullptr);
  r.backward = directional(g, f, nullptr);
  assert(r.distance == std::max(r.forward, r.backward));
  return r;
}

}  // namespace

bool box_intersects(const Ccdh& h, const RhBox& b) {
  const double lx = b.lower_x();
  const double ly = b.lower_y();
  const double rx = b.upper_x();
  const double ry = b.upper_y();
  const double end = static_cast<double>(h.max_degree() + 1);

  // Touching boxes are the interesting case (the distance is exactly the
  // radius at which a box first touches the curve), and the corners are
  // products of rounded quantities, so allow a few ulps of slack.
  auto at_least = [](double v, double bound) {
    return v >= bound - kBoxSlack * std::max(1.0, std::abs(bound));
  };
  auto at_most = [](double v, double bound) {
    return v <= bound + kBoxSlack * std::max(1.0, std::abs(bound));
  };

  // The curve is continuous and nonincreasing on [1, end], so over the
  // clipped x-range [a, c] it takes exactly the values [H(c), H(a)].
  if (!at_least(rx, 1.0) || !at_most(lx, end)) return false;
  const double a = std::clamp(lx, 1.0, end);
  const double c = std::clamp(rx, 1.0, end);
  return at_least(smooth_eval(h, a), ly) && at_most(smooth_eval(h, c), ry);
}

double smooth_rh_point(Degree x, double y, const Ccdh& h, double eps) {
  return point_distance(x, y, h, eps, nullptr);
}

double smooth_rh_point(Degree x, double y, const Ccdh& h, double eps, WorkCounter& work) {
  return point_distance(x, y, h, eps, &work);
}

double smooth_rh_directional(const Ccdh& f, const Ccdh& g) {
  return directional(f, g, nullptr);
}

RhResult smooth_rh(const Ccdh& f, const Ccdh& g) { return full(f, g, nullptr); }

RhResult smooth_rh(const Ccdh& f, const Ccdh& g, WorkCounter& work) {
  return full(f, g, &work);
}

double smooth_rh_distance(const Ccdh& f, const Ccdh& g) { return interleaved(f, g, nullptr); }

double smooth_rh_distance(const Ccdh& f, const Ccdh& g, WorkCounter& work) {
  return interleaved(f, g, &work);
}

double discrete_rh_directional(const Ccdh& f, const Ccdh& g) {
  double worst = 0.0;
  for (Degree d = 1; d <= f.max_degree(); ++d) {
    const double fd = at(f, d);
    double best = INFINITY;
    for (Degree dp = 1; dp <= g.max_degree() + 1; ++dp) {
      const double dx = static_cast<double>(std::llabs(d - dp)) / static_cast<double>(d);
      const double dy = std::abs(fd - at(g, dp)) / fd;
      best = std::min(best, std::max(dx, dy));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

RhResult discrete_rh(const Ccdh& f, const Ccdh& g) {
  RhResult r;
  r.forward = discrete_rh_directional(f, g);
  r.backward = discrete_rh_directional(g, f);
  r.distance = std::max(r.forward, r.backward);
  return r;
}

}  // namespace rhdist
