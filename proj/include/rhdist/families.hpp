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

#ifndef RHDIST_FAMILIES_HPP_
#define RHDIST_FAMILIES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rhdist/ccdh.hpp"

namespace rhdist {

enum class FamilyKind {
  kComplete,           // K_n
  kCycle,              // C_n
  kPath,               // P_n
  kStar,               // K_{1,n-1}
  kCompleteBipartite,  // K_{a,b}
  kStarDegreed,        // one vertex of degree k, n - 1 pendants
  kRegular,            // circulant r-regular graph on n vertices
};

// A structured graph family member. `a` is the vertex count except for
// complete-bipartite, where (a, b) are the part sizes; `b` is k for
// star-degreed and r for regular.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kComplete;
  Degree a = 0;
  Degree b = 0;

  static FamilySpec complete(Degree n) { return {FamilyKind::kComplete, n, 0}; }
  static FamilySpec cycle(Degree n) { return {FamilyKind::kCycle, n, 0}; }
  static FamilySpec path(Degree n) { return {FamilyKind::kPath, n, 0}; }
  static FamilySpec star(Degree n) { return {FamilyKind::kStar, n, 0}; }
  static FamilySpec complete_bipartite(Degree a, Degree b) {
    return {FamilyKind::kCompleteBipartite, a, b};
  }
  static FamilySpec star_degreed(Degree n, Degree k) { return {FamilyKind::kStarDegreed, n, k}; }
  static FamilySpec regular(Degree n, Degree r) { return {FamilyKind::kRegular, n, r}; }
};

// Throws ParameterError naming the violated constraint.
void validate(const FamilySpec& spec);

std::string to_string(const FamilySpec& spec);

// Exact ccdh of the family member, built without materializing edges.
Ccdh family_ccdh(const FamilySpec& spec);

// One concrete simple graph realizing the family member; vertices 0..n-1.
std::vector<Edge> family_edges(const FamilySpec& spec);

// Parses "complete 5", "bipartite 2 8", "star-degreed 6 5", ... starting at
// tokens[pos]; advances pos past the consumed tokens. Throws ParameterError.
FamilySpec parse_family(std::span<const std::string> tokens, std::size_t& pos);

}  // namespace rhdist

#endif  // RHDIST_FAMILIES_HPP_
