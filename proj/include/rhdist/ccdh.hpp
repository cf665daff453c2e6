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

#ifndef RHDIST_CCDH_HPP_
#define RHDIST_CCDH_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rhdist {

using Degree = std::int64_t;
using Count = std::int64_t;
using VertexId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

// Degree histogram n(k): number of vertices with degree exactly k, over the
// non-isolated vertices of a graph. Keys and values are both >= 1.
class DegreeHistogram {
 public:
  // Throws ParameterError when a key or a value is < 1, or when empty.
  explicit DegreeHistogram(std::map<Degree, Count> counts);

  const std::map<Degree, Count>& counts() const noexcept { return counts_; }
  Count count(Degree k) const;
  Degree max_degree() const noexcept { return counts_.rbegin()->first; }
  Count vertex_count() const noexcept { return vertex_count_; }

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

 private:
  std::map<Degree, Count> counts_;
  Count vertex_count_ = 0;
};

// Complementary cumulative degree histogram N(k) = #{v : d(v) >= k}, stored
// densely for k = 1..max_degree(). Nonincreasing, every entry positive.
// Evaluation past the maximum degree yields 0.
class Ccdh {
 public:
  // Throws ParameterError unless `values` is nonempty, positive and
  // nonincreasing.
  explicit Ccdh(std::vector<Count> values);

  Degree max_degree() const noexcept { return static_cast<Degree>(values_.size()); }
  Count vertex_count() const noexcept { return values_.front(); }
  std::span<const Count> values() const noexcept { return values_; }

  // N(k) for k >= 1; 0 for k > max_degree(). k < 1 is a precondition
  // violation.
  Count operator[](Degree k) const noexcept {
    return k <= max_degree() ? values_[static_cast<std::size_t>(k - 1)] : 0;
  }

  friend bool operator==(const Ccdh&, const Ccdh&) = default;

 private:
  std::vector<Count> values_;
};

// Throws EmptyGraphError on an empty edge set and ParameterError on a
// self-loop. Duplicate edges are a precondition violation (they are counted).
DegreeHistogram degree_histogram(std::span<const Edge> edges);

Ccdh ccdh_from_histogram(const DegreeHistogram& h);

// Inverse of ccdh_from_histogram: n(k) = N(k) - N(k+1), zero entries dropped.
DegreeHistogram histogram_from_ccdh(const Ccdh& c);

// Piecewise-linear interpolation of the ccdh:
//   (1 - t) N(j) + t N(j+1),  j = floor(x), t = x - j
// with N(k) = 0 past the maximum degree. Throws DomainError for x < 1.
double smooth_eval(const Ccdh& c, double x);

// Erdos-Gallai test. Every degree must be >= 1; an empty multiset is not
// graphical.
bool is_graphical(std::span<const Degree> degrees);

}  // namespace rhdist

#endif  // RHDIST_CCDH_HPP_
