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

#include "rhdist/perturb.hpp"

#include <map>
#include <utility>

#include "rhdist/error.hpp"
#include "rhdist/rh.hpp"

namespace rhdist {

std::string to_string(PerturbMode mode) {
  return mode == PerturbMode::kAdd ? "add" : "delete";
}

std::vector<PerturbClass> perturbation_classes(const Graph& g, PerturbMode mode) {
  std::map<std::pair<Degree, Degree>, Count> by_edge;
  for (Graph::Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const Graph::Vertex v : g.neighbors(u)) {
      if (u >= v) continue;
      Degree a = g.degree(u);
      Degree b = g.degree(v);
      if (a > b) std::swap(a, b);
      ++by_edge[{a, b}];
    }
  }

  std::vector<PerturbClass> out;
  if (mode == PerturbMode::kDelete) {
    for (const auto& [key, count] : by_edge) {
      out.push_back({mode, key.first, key.second, count});
    }
    return out;
  }

  const DegreeHistogram histogram = degree_histogram(g);
  const auto& counts = histogram.counts();
  for (auto ia = counts.begin(); ia != counts.end(); ++ia) {
    for (auto ib = ia; ib != counts.end(); ++ib) {
      const Count pairs =
          ia == ib ? ia->second * (ia->second - 1) / 2 : ia->second * ib->second;
      const auto it = by_edge.find({ia->first, ib->first});
      const Count adjacent = it == by_edge.end() ? 0 : it->second;
      if (pairs > adjacent) out.push_back({mode, ia->first, ib->first, pairs - adjacent});
    }
  }
  return out;
}

Ccdh perturbed_ccdh(const Ccdh& c, const PerturbClass& cls) {
  std::vector<Count> v(c.values().begin(), c.values().end());
  auto bump = [&](Degree k, Count delta) {
    if (k > static_cast<Degree>(v.size())) v.resize(static_cast<std::size_t>(k), 0);
    v[static_cast<std::size_t>(k - 1)] += delta;
  };
  if (cls.mode == PerturbMode::kAdd) {
    bump(cls.a + 1, 1);
    bump(cls.b + 1, 1);
  } else {
    if (cls.a > c.max_degree() || cls.b > c.max_degree()) {
      throw ParameterError("delete class exceeds the maximum degree");
    }
    bump(cls.a, -1);
    bump(cls.b, -1);
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) throw EmptyGraphError("empty result: deletion removes the last edge");
  }
  return Ccdh(std::move(v));
}

PerturbStats perturb_stats(const Graph& g, PerturbMode mode) {
  const auto classes = perturbation_classes(g, mode);
  if (classes.empty()) throw Error("no applicable perturbations (" + to_string(mode) + ")");
  const Ccdh base = graph_ccdh(g);

  PerturbStats stats;
  stats.class_count = classes.size();
  double weighted = 0.0;
  Count total = 0;
  bool first = true;
  for (const auto& cls : classes) {
    const double eps = smooth_rh_distance(base, perturbed_ccdh(base, cls));
    if (first || eps > stats.max_eps) {
      stats.max_eps = eps;
      stats.argmax = cls;
      first = false;
    }
    weighted += eps * static_cast<double>(cls.multiplicity);
    total += cls.multiplicity;
  }
  stats.avg_eps = weighted / static_cast<double>(total);
  return stats;
}

}  // namespace rhdist
