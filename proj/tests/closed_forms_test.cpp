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

#include "rhdist/closed_forms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rhdist/error.hpp"
#include "rhdist/families.hpp"
#include "rhdist/rh.hpp"
#include "test_util.hpp"

namespace rhdist {
namespace {

using testing::C;

constexpr double kTol = 1e-9;

TEST(FamiliesTest, Examples) {
  EXPECT_EQ(family_ccdh(FamilySpec::complete(4)), C({4, 4, 4}));
  EXPECT_EQ(family_ccdh(FamilySpec::cycle(6)), C({6, 6}));
  EXPECT_EQ(family_ccdh(FamilySpec::star_degreed(6, 5)), C({6, 1, 1, 1, 1}));
  EXPECT_EQ(family_ccdh(FamilySpec::star_degreed(8, 3)), C({8, 1, 1}));
  EXPECT_EQ(family_ccdh(FamilySpec::path(5)), C({5, 3}));
  EXPECT_EQ(family_ccdh(FamilySpec::complete_bipartite(2, 3)), C({5, 5, 2}));
  EXPECT_EQ(family_ccdh(FamilySpec::regular(6, 3)), C({6, 6, 6}));
}

TEST(FamiliesTest, InvalidParameters) {
  EXPECT_THROW(family_ccdh(FamilySpec::complete(1)), ParameterError);
  EXPECT_THROW(family_ccdh(FamilySpec::cycle(2)), ParameterError);
  EXPECT_THROW(family_ccdh(FamilySpec::star_degreed(7, 3)), ParameterError);
  EXPECT_THROW(family_ccdh(FamilySpec::star_degreed(6, 1)), ParameterError);
  EXPECT_THROW(family_ccdh(FamilySpec::regular(5, 3)), ParameterError);
  EXPECT_THROW(family_ccdh(FamilySpec::regular(4, 4)), ParameterError);
}

TEST(FamiliesTest, EdgeListsMatchCcdh) {
  const FamilySpec specs[] = {
      FamilySpec::complete(7),         FamilySpec::cycle(9),
      FamilySpec::path(6),             FamilySpec::star(8),
      FamilySpec::complete_bipartite(3, 5), FamilySpec::star_degreed(9, 4),
      FamilySpec::regular(10, 4),      FamilySpec::regular(9, 2),
  };
  for (const auto& spec : specs) {
    const auto edges = family_edges(spec);
    EXPECT_EQ(ccdh_from_histogram(degree_histogram(edges)), family_ccdh(spec)) << to_string(spec);
  }
}

TEST(FamiliesTest, ParseFamily) {
  const std::vector<std::string> tokens = {"complete", "5", "star-degreed", "8", "3", "bipartite", "2", "4"};
  std::size_t pos = 0;
  const auto a = parse_family(tokens, pos);
  const auto b = parse_family(tokens, pos);
  const auto c = parse_family(tokens, pos);
  EXPECT_EQ(pos, tokens.size());
  EXPECT_EQ(family_ccdh(a), family_ccdh(FamilySpec::complete(5)));
  EXPECT_EQ(family_ccdh(b), C({8, 1, 1}));
  EXPECT_EQ(family_ccdh(c), family_ccdh(FamilySpec::complete_bipartite(2, 4)));
  const std::vector<std::string> bad = {"hypercube", "3"};
  pos = 0;
  EXPECT_THROW(parse_family(bad, pos), ParameterError);
}

TEST(CompleteCompleteTest, Examples) {
  EXPECT_NEAR(rh_complete_complete(3, 4), 1.0 / 3.0, kTol);
  EXPECT_NEAR(rh_complete_complete(3, 5), 2.0 / 3.0, kTol);
  EXPECT_EQ(rh_complete_complete(9, 9), 0.0);
  EXPECT_THROW(rh_complete_complete(2, 4), ParameterError);
  EXPECT_THROW(rh_complete_complete(5, 4), ParameterError);
}

TEST(CompleteCompleteTest, MatchesAlgorithm) {
  for (Degree n = 3; n <= 60; ++n) {
    for (Degree m = n; m <= 60; ++m) {
      const double got = smooth_rh(family_ccdh(FamilySpec::complete(n)),
                                   family_ccdh(FamilySpec::complete(m)))
                             .distance;
      ASSERT_NEAR(got, rh_complete_complete(n, m), kTol) << n << "," << m;
    }
  }
}

TEST(CompleteCycleTest, Examples) {
  EXPECT_NEAR(rh_complete_cycle(10, 3), 7.0 / 3.0, kTol);
  EXPECT_NEAR(rh_complete_cycle(10, 30), 5.0 / 4.0, kTol);
  const double alg = smooth_rh(family_ccdh(FamilySpec::complete(10)),
                               family_ccdh(FamilySpec::cycle(30)))
                         .distance;
  EXPECT_NEAR(alg, rh_complete_cycle(10, 30), kTol);
  EXPECT_THROW(rh_complete_cycle(2, 5), ParameterError);
}

TEST(CompleteCycleTest, Breakpoints) {
  EXPECT_NEAR(complete_cycle_lower_breakpoint(10), (70.0 + std::sqrt(10900.0)) / 30.0, 1e-12);
  EXPECT_NEAR(complete_cycle_upper_breakpoint(10), (70.0 + std::sqrt(6700.0)) / 9.0, 1e-12);
}

TEST(CompleteCycleTest, EveryCaseThatAppliesMatchesAlgorithm) {
  for (Degree n = 3; n <= 60; ++n) {
    for (Degree m = 3; m <= 60; ++m) {
      const double alg = smooth_rh(family_ccdh(FamilySpec::complete(n)),
                                   family_ccdh(FamilySpec::cycle(m)))
                             .distance;
      for (const auto& c : complete_cycle_cases(n, m)) {
        ASSERT_NEAR(c.value, alg, kTol) << "n=" << n << " m=" << m << " case " << c.index;
      }
      if (!complete_cycle_cases(n, m).empty()) {
        ASSERT_NEAR(rh_complete_cycle(n, m), alg, kTol);
      } else {
        ASSERT_THROW(rh_complete_cycle(n, m), ParameterError);
      }
    }
  }
}

TEST(MaxRhTest, Examples) {
  EXPECT_NEAR(max_rh(2, 5), 1.5, kTol);
  EXPECT_NEAR(max_rh(3, 4), 7.0 / 9.0, kTol);
  EXPECT_NEAR(max_rh(3, 3), 2.0 / 7.0, kTol);
  EXPECT_THROW(max_rh(1, 4), ParameterError);
  EXPECT_THROW(max_rh(5, 4), ParameterError);
}

TEST(MaxRhTest, MatchesExhaustiveEnumeration) {
  std::vector<std::vector<Ccdh>> by_size(8);
  for (int n = 2; n <= 7; ++n) by_size[n] = testing::graphical_ccdhs(n);
  for (int n = 2; n <= 7; ++n) {
    for (int m = n; m <= 7; ++m) {
      double best = 0.0;
      for (const auto& f : by_size[n]) {
        for (const auto& g : by_size[m]) best = std::max(best, smooth_rh(f, g).distance);
      }
      EXPECT_NEAR(best, max_rh(n, m), kTol) << n << "," << m;
    }
  }
}

TEST(NormalizedRatioTest, Examples) {
  const auto k3 = family_ccdh(FamilySpec::complete(3));
  const auto k5 = family_ccdh(FamilySpec::complete(5));
  EXPECT_EQ(normalized_ratio(k5, k5), 0.0);
  EXPECT_NEAR(normalized_ratio(k3, k5), 11.0 / 21.0, kTol);
}

TEST(NormalizedRatioTest, ExtremalPairReachesOne) {
  // A star on m vertices against K_m attains the bound.
  for (Degree m = 4; m <= 30; ++m) {
    EXPECT_NEAR(normalized_ratio(family_ccdh(FamilySpec::star(m)), family_ccdh(FamilySpec::complete(m))),
                1.0, kTol)
        << m;
  }
}

TEST(NormalizedRatioTest, WithinUnitInterval) {
  std::vector<Ccdh> all;
  for (int n = 3; n <= 6; ++n) {
    const auto v = testing::graphical_ccdhs(n);
    all.insert(all.end(), v.begin(), v.end());
  }
  for (const auto& f : all) {
    for (const auto& g : all) {
      const double r = normalized_ratio(f, g);
      ASSERT_GE(r, 0.0);
      ASSERT_LE(r, 1.0 + kTol);
    }
  }
}

TEST(StarPerturbationTest, Examples) {
  const auto v6 = star_perturbation_values(6);
  EXPECT_NEAR(v6.smooth_forward, 2.0 / 5.0, kTol);
  EXPECT_NEAR(v6.smooth_backward, 2.0 / 13.0, kTol);
  EXPECT_NEAR(v6.discrete_forward, 0.5, kTol);
  EXPECT_NEAR(v6.discrete_backward, 2.0 / 3.0, kTol);
  const auto v100 = star_perturbation_values(100);
  EXPECT_NEAR(v100.smooth_backward, 2.0 / 201.0, kTol);
  EXPECT_THROW(star_perturbation_values(4), ParameterError);
}

TEST(StarPerturbationTest, MatchesAlgorithm) {
  for (Degree n = 5; n <= 50; ++n) {
    const auto s = family_ccdh(FamilySpec::star(n));
    std::vector<Count> v(s.values().begin(), s.values().end());
    v[1] = 3;
    const Ccdh s_star(v);
    const auto expected = star_perturbation_values(n);
    ASSERT_NEAR(smooth_rh_directional(s, s_star), expected.smooth_forward, kTol);
    ASSERT_NEAR(smooth_rh_directional(s_star, s), expected.smooth_backward, kTol);
    ASSERT_NEAR(discrete_rh_directional(s, s_star), expected.discrete_forward, kTol);
    ASSERT_NEAR(discrete_rh_directional(s_star, s), expected.discrete_backward, kTol);
  }
}

TEST(DensityPairTest, HalfFirstTerm) {
  const auto p = density_pair(0.5, 1);
  EXPECT_EQ(p.f, C({9, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(p.g, Ccdh(std::vector<Count>(8, 9)));
  EXPECT_NEAR(p.tau, 62.0 / 19.0, kTol);
  EXPECT_NEAR(smooth_rh(p.f, p.g).distance, p.tau, kTol);
}

TEST(DensityPairTest, AlgorithmMatchesTau) {
  for (double c : {0.5, 1.0 / 3.0, 0.25, 0.37, 0.2, 0.45}) {
    for (int i = 1; i <= 8; ++i) {
      const auto p = density_pair(c, i);
      ASSERT_NEAR(smooth_rh(p.f, p.g).distance, p.tau, kTol * std::max(1.0, p.tau)) << c << " " << i;
    }
  }
}

TEST(DensityPairTest, ThirdApproachesDensity) {
  double prev = 1e9;
  for (int i = 1; i <= 10; ++i) {
    const auto p = density_pair(1.0 / 3.0, i);
    const double gap = std::abs(p.tau / static_cast<double>(p.n) - 1.0 / 3.0);
    EXPECT_LT(gap, prev) << i;
    prev = gap;
  }
}

TEST(DensityPairTest, InvalidDensity) {
  EXPECT_THROW(density_pair(0.0, 1), ParameterError);
  EXPECT_THROW(density_pair(0.6, 1), ParameterError);
  EXPECT_THROW(density_pair(0.5, 0), ParameterError);
}

}  // namespace
}  // namespace rhdist
