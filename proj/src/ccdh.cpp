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

#include "rhdist/ccdh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_map>

#include "rhdist/error.hpp"

namespace rhdist {

DegreeHistogram::DegreeHistogram(std::map<Degree, Count> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw ParameterError("degree histogram is empty");
  for (const auto& [k, n] : counts_) {
    if (k < 1) throw ParameterError("degree histogram key " + std::to_string(k) + " < 1");
    if (n < 1) {
      throw ParameterError("degree histogram count for degree " + std::to_string(k) + " < 1");
    }
    vertex_count_ += n;
  }
}

Count DegreeHistogram::count(Degree k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

Ccdh::Ccdh(std::vector<Count> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("ccdh is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) {
      throw ParameterError("ccdh value N(" + std::to_string(i + 1) + ") is not positive");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw ParameterError("ccdh increases at degree " + std::to_string(i + 1));
    }
  }
}

DegreeHistogram degree_histogram(std::span<const Edge> edges) {
  if (edges.empty()) throw EmptyGraphError("empty graph: RH distance is undefined");
  std::unordered_map<VertexId, Degree> degree;
  degree.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw ParameterError("self-loop on vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  std::map<Degree, Count> counts;
  for (const auto& [v, d] : degree) ++counts[d];
  return DegreeHistogram(std::move(counts));
}

Ccdh ccdh_from_histogram(const DegreeHistogram& h) {
  const Degree delta = h.max_degree();
  std::vector<Count> values(static_cast<std::size_t>(delta), 0);
  for (const auto& [k, n] : h.counts()) values[static_cast<std::size_t>(k - 1)] = n;
  // Suffix sums turn n(k) into N(k).
  for (Degree k = delta - 1; k >= 1; --k) {
    values[static_cast<std::size_t>(k - 1)] += values[static_cast<std::size_t>(k)];
  }
  return Ccdh(std::move(values));
}

DegreeHistogram histogram_from_ccdh(const Ccdh& c) {
  std::map<Degree, Count> counts;
  for (Degree k = 1; k <= c.max_degree(); ++k) {
    const Count n = c[k] - c[k + 1];
    if (n > 0) counts.emplace(k, n);
  }
  return DegreeHistogram(std::move(counts));
}

double smooth_eval(const Ccdh& c, double x) {
  if (!(x >= 1.0)) throw DomainError("smooth ccdh evaluated below degree 1");
  if (x >= static_cast<double>(c.max_degree() + 1)) return 0.0;
  const double floor_x = std::floor(x);
  const auto j = static_cast<Degree>(floor_x);
  const double t = x - floor_x;
  return (1.0 - t) * static_cast<double>(c[j]) + t * static_cast<double>(c[j + 1]);
}

bool is_graphical(std::span<const Degree> degrees) {
  if (degrees.empty()) return false;
  std::vector<Degree> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto n = static_cast<Degree>(d.size());
  if (d.back() < 1 || d.front() > n - 1) return false;
  Degree total = 0;
  for (Degree x : d) total += x;
  if (total % 2 != 0) return false;

  Degree lhs = 0;
  for (Degree k = 1; k <= n; ++k) {
    lhs += d[static_cast<std::size_t>(k - 1)];
    Degree rhs = k * (k - 1);
    for (Degree i = k; i < n; ++i) rhs += std::min(d[static_cast<std::size_t>(i)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace rhdist
