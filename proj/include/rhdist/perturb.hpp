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

#ifndef RHDIST_PERTURB_HPP_
#define RHDIST_PERTURB_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rhdist/ccdh.hpp"
#include "rhdist/graph_io.hpp"

namespace rhdist {

enum class PerturbMode { kAdd, kDelete };

std::string to_string(PerturbMode mode);

// Single-edge edits grouped by the (unordered) degrees of their endpoints;
// every edit in a class yields the same perturbed ccdh.
struct PerturbClass {
  PerturbMode mode = PerturbMode::kAdd;
  Degree a = 1;  // a <= b
  Degree b = 1;
  Count multiplicity = 0;

  friend bool operator==(const PerturbClass&, const PerturbClass&) = default;
};

// Classes sorted by (a, b). Delete: endpoint-degree pairs of existing edges.
// Add: degree pairs with at least one non-adjacent vertex pair; multiplicity
// is the number of such pairs. Multiplicities sum to |E| (delete) or
// C(n, 2) - |E| (add).
std::vector<PerturbClass> perturbation_classes(const Graph& g, PerturbMode mode);

// Add (a, b): N(a+1) and N(b+1) each grow by one. Delete (a, b): N(a) and
// N(b) each shrink by one, trailing zeros trimmed. Throws EmptyGraphError
// if a deletion leaves nothing.
Ccdh perturbed_ccdh(const Ccdh& c, const PerturbClass& cls);

struct PerturbStats {
  double max_eps = 0.0;
  PerturbClass argmax;
  double avg_eps = 0.0;  // multiplicity-weighted, i.e. over individual edits
  std::size_t class_count = 0;
};

// Smooth RH distance between g and each perturbed graph. Throws Error
// ("no applicable perturbations") when there is no edit of this kind.
PerturbStats perturb_stats(const Graph& g, PerturbMode mode);

}  // namespace rhdist

#endif  // RHDIST_PERTURB_HPP_
