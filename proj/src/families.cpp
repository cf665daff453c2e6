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

#include "rhdist/families.hpp"

#include <algorithm>
#include <charconv>

#include "rhdist/error.hpp"

namespace rhdist {
namespace {

void require(bool ok, const FamilySpec& spec, const char* constraint) {
  if (!ok) throw ParameterError(to_string(spec) + ": requires " + constraint);
}

Degree parse_int(const std::string& token) {
  Degree value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

void validate(const FamilySpec& spec) {
  const Degree n = spec.a;
  switch (spec.kind) {
    case FamilyKind::kComplete:
      require(n >= 2, spec, "n >= 2");
      break;
    case FamilyKind::kCycle:
      require(n >= 3, spec, "n >= 3");
      break;
    case FamilyKind::kPath:
    case FamilyKind::kStar:
      require(n >= 2, spec, "n >= 2");
      break;
    case FamilyKind::kCompleteBipartite:
      require(spec.a >= 1 && spec.b >= 1, spec, "both parts >= 1");
      break;
    case FamilyKind::kStarDegreed:
      require(n >= 3, spec, "n >= 3");
      require(spec.b >= 2 && spec.b <= n - 1, spec, "2 <= k <= n - 1");
      require((n - 1 - spec.b) % 2 == 0, spec, "n - 1 - k even (pendants pair up)");
      break;
    case FamilyKind::kRegular:
      require(n >= 2, spec, "n >= 2");
      require(spec.b >= 1 && spec.b < n, spec, "1 <= r < n");
      require((spec.b * n) % 2 == 0, spec, "r * n even");
      break;
  }
}

std::string to_string(const FamilySpec& spec) {
  const std::string a = std::to_string(spec.a);
  const std::string b = std::to_string(spec.b);
  switch (spec.kind) {
    case FamilyKind::kComplete: return "complete " + a;
    case FamilyKind::kCycle: return "cycle " + a;
    case FamilyKind::kPath: return "path " + a;
    case FamilyKind::kStar: return "star " + a;
    case FamilyKind::kCompleteBipartite: return "bipartite " + a + " " + b;
    case FamilyKind::kStarDegreed: return "star-degreed " + a + " " + b;
    case FamilyKind::kRegular: return "regular " + a + " " + b;
  }
  return "?";
}

Ccdh family_ccdh(const FamilySpec& spec) {
  validate(spec);
  const Degree n = spec.a;
  std::vector<Count> v;
  switch (spec.kind) {
    case FamilyKind::kComplete:
      v.assign(static_cast<std::size_t>(n - 1), n);
      break;
    case FamilyKind::kCycle:
      v = {n, n};
      break;
    case FamilyKind::kPath:
      v = n == 2 ? std::vector<Count>{2} : std::vector<Count>{n, n - 2};
      break;
    case FamilyKind::kStar:
      v.assign(static_cast<std::size_t>(n - 1), 1);
      v[0] = n;
      break;
    case FamilyKind::kCompleteBipartite: {
      const Degree delta = std::max(spec.a, spec.b);
      for (Degree k = 1; k <= delta; ++k) {
        v.push_back((k <= spec.b ? spec.a : 0) + (k <= spec.a ? spec.b : 0));
      }
      break;
    }
    case FamilyKind::kStarDegreed:
      v.assign(static_cast<std::size_t>(spec.b), 1);
      v[0] = n;
      break;
    case FamilyKind::kRegular:
      v.assign(static_cast<std::size_t>(spec.b), n);
      break;
  }
  return Ccdh(std::move(v));
}

std::vector<Edge> family_edges(const FamilySpec& spec) {
  validate(spec);
  const auto n = static_cast<VertexId>(spec.a);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::kComplete:
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case FamilyKind::kCycle:
      for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case FamilyKind::kPath:
      for (VertexId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case FamilyKind::kStar:
      for (VertexId u = 1; u < n; ++u) edges.emplace_back(0, u);
      break;
    case FamilyKind::kCompleteBipartite: {
      const auto a = static_cast<VertexId>(spec.a);
      const auto b = static_cast<VertexId>(spec.b);
      for (VertexId u = 0; u < a; ++u) {
        for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, a + v);
      }
      break;
    }
    case FamilyKind::kStarDegreed: {
      const auto k = static_cast<VertexId>(spec.b);
      for (VertexId u = 1; u <= k; ++u) edges.emplace_back(0, u);
      for (VertexId u = k + 1; u + 1 < n; u += 2) edges.emplace_back(u, u + 1);
      break;
    }
    case FamilyKind::kRegular: {
      const auto r = static_cast<VertexId>(spec.b);
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId d = 1; d <= r / 2; ++d) edges.emplace_back(u, (u + d) % n);
        if (r % 2 == 1 && u < n / 2) edges.emplace_back(u, u + n / 2);
      }
      break;
    }
  }
  return edges;
}

FamilySpec parse_family(std::span<const std::string> tokens, std::size_t& pos) {
  auto next_int = [&](const std::string& name) {
    if (pos >= tokens.size()) throw ParameterError("family '" + name + "' is missing a parameter");
    return parse_int(tokens[pos++]);
  };
  if (pos >= tokens.size()) throw ParameterError("expected a family name");
  const std::string name = tokens[pos++];
  FamilySpec spec;
  if (name == "complete") {
    spec = FamilySpec::complete(next_int(name));
  } else if (name == "cycle") {
    spec = FamilySpec::cycle(next_int(name));
  } else if (name == "path") {
    spec = FamilySpec::path(next_int(name));
  } else if (name == "star") {
    spec = FamilySpec::star(next_int(name));
  } else if (name == "bipartite" || name == "complete-bipartite") {
    const Degree a = next_int(name);
    spec = FamilySpec::complete_bipartite(a, next_int(name));
  } else if (name == "star-degreed") {
    const Degree n = next_int(name);
    spec = FamilySpec::star_degreed(n, next_int(name));
  } else if (name == "regular") {
    const Degree n = next_int(name);
    spec = FamilySpec::regular(n, next_int(name));
  } else {
    throw ParameterError("unknown family '" + name + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace rhdist
