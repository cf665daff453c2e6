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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if
// any criterion fails. Every tolerance and budget is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rhdist/bench.hpp"
#include "rhdist/closed_forms.hpp"
#include "rhdist/error.hpp"
#include "rhdist/families.hpp"
#include "rhdist/graph_io.hpp"
#include "rhdist/matrix.hpp"
#include "rhdist/oracle.hpp"
#include "rhdist/perturb.hpp"
#include "rhdist/rh.hpp"
#include "test_util.hpp"

namespace {

using namespace rhdist;
namespace fs = std::filesystem;

constexpr double kExactTol = 1e-9;          // closed-form agreement
constexpr double kOracleTol = 1e-6;         // bisection oracle agreement
constexpr double kCompleteBudgetSec = 5.0;  // complete-graph sweep
constexpr double kMaxRhBudgetSec = 120.0;   // exhaustive enumeration
constexpr double kWorkConstant = 2.0;       // accesses <= C * (Delta_F + Delta_G)
constexpr double kFastGrowthMax = 2.5;      // per doubling of Delta
constexpr double kBaselineGrowthMin = 3.0;  // per doubling, largest sizes
constexpr int kBaselineTailDoublings = 2;   // "largest sizes" = last two doublings

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Ccdh complete(Degree n) { return family_ccdh(FamilySpec::complete(n)); }

Ccdh star_plus_pendant_edge(Degree n) {
  const auto s = family_ccdh(FamilySpec::star(n));
  std::vector<Count> v(s.values().begin(), s.values().end());
  v[1] = 3;
  return Ccdh(std::move(v));
}

// Directional value by bisection, independent of the fast path.
double directional_oracle(const Ccdh& f, const Ccdh& g) {
  double eps = 0.0;
  for (Degree d = 1; d <= f.max_degree(); ++d) {
    eps = std::max(eps, oracle_point_epsilon(static_cast<double>(d), static_cast<double>(f[d]), g));
  }
  return eps;
}

Verdict complete_graphs() {
  Clock clock;
  double worst = 0.0;
  int pairs = 0;
  for (Degree n = 3; n <= 60; ++n) {
    for (Degree m = n; m <= 60; ++m) {
      const double got = smooth_rh(complete(n), complete(m)).distance;
      const double want = static_cast<double>(m - n) / static_cast<double>(n);
      worst = std::max(worst, std::abs(got - want));
      ++pairs;
    }
  }
  const double t = clock.seconds();
  return {worst <= kExactTol && t < kCompleteBudgetSec && pairs == 1711,
          std::to_string(pairs) + " pairs, max error " + fmt("%.3g", worst) + ", " + fmt("%.3f", t) + " s"};
}

Verdict triangle_counterexamples() {
  Verdict v;
  const double ab = smooth_rh(complete(3), complete(4)).distance;
  const double bc = smooth_rh(complete(4), complete(5)).distance;
  const double ac = smooth_rh(complete(3), complete(5)).distance;
  const bool complete_ok = std::abs(ab + bc - 7.0 / 12.0) <= kExactTol &&
                           std::abs(ac - 2.0 / 3.0) <= kExactTol && ab + bc < ac;
  v.detail = "K3/K4/K5 sum " + fmt("%.12g", ab + bc) + " vs " + fmt("%.12g", ac) +
             (complete_ok ? " ok" : " MISMATCH");
  v.pass = complete_ok;

  // Six-vertex trees: F = star, G = degrees {4,2,1,1,1,1}, H = {3,3,1,1,1,1}.
  const auto f = testing::C({6, 1, 1, 1, 1});
  const auto g = testing::C({6, 2, 1, 1});
  const auto h = testing::C({6, 2, 2});
  struct Row {
    const char* name;
    const Ccdh* a;
    const Ccdh* b;
    double expected;
  };
  const Row rows[] = {{"F->G", &f, &g, 1.0 / 3.0}, {"G->F", &g, &f, 1.0 / 12.0},
                      {"F->H", &f, &h, 1.0},       {"H->F", &h, &f, 0.5},
                      {"H->G", &h, &g, 1.0 / 5.0}, {"G->H", &g, &h, 1.0 / 7.0}};
  for (const auto& r : rows) {
    const double got = smooth_rh_directional(*r.a, *r.b);
    if (std::abs(got - r.expected) > kExactTol) {
      v.pass = false;
      v.detail += std::string("; tree ") + r.name + " = " + fmt("%.12g", got) + " (expected " +
                  fmt("%.12g", r.expected) + ", oracle " +
                  fmt("%.9g", directional_oracle(*r.a, *r.b)) + ")";
    }
  }
  return v;
}

Verdict complete_cycle() {
  int covered = 0;
  double worst = 0.0;
  std::vector<std::string> uncovered;
  for (Degree n = 3; n <= 60; ++n) {
    for (Degree m = 3; m <= 60; ++m) {
      if (complete_cycle_cases(n, m).empty()) {
        uncovered.push_back("(" + std::to_string(n) + "," + std::to_string(m) + ")");
        continue;
      }
      const double alg = smooth_rh(complete(n), family_ccdh(FamilySpec::cycle(m))).distance;
      worst = std::max(worst, std::abs(alg - rh_complete_cycle(n, m)));
      ++covered;
    }
  }
  std::string detail = std::to_string(covered) + " covered pairs, max error " + fmt("%.3g", worst) + ", " +
                       std::to_string(uncovered.size()) + " uncovered";
  for (std::size_t i = 0; i < uncovered.size() && i < 20; ++i) detail += (i ? " " : ": ") + uncovered[i];
  return {worst <= kExactTol, detail};
}

Verdict star_degreed_perturbation() {
  Verdict v;
  double worst = 0.0;
  for (Degree n = 5; n <= 50; ++n) {
    const auto s = family_ccdh(FamilySpec::star(n));
    const auto s_star = star_plus_pendant_edge(n);
    const double nd = static_cast<double>(n);
    worst = std::max({worst, std::abs(smooth_rh_directional(s, s_star) - 0.4),
                      std::abs(smooth_rh_directional(s_star, s) - 2.0 / (2.0 * nd + 1.0)),
                      std::abs(discrete_rh_directional(s, s_star) - 0.5),
                      std::abs(discrete_rh_directional(s_star, s) - 2.0 / 3.0)});
  }
  v.pass = worst <= kExactTol;
  v.detail = "star values max error " + fmt("%.3g", worst);

  double discrete_worst = 0.0;
  std::vector<std::string> not_decreasing;
  double prev = 0.0;
  for (Degree n = 5; n <= 50; ++n) {
    const auto a = family_ccdh(FamilySpec::complete_bipartite(2, n - 2));
    const auto b = graph_ccdh(Graph::from_edges(testing::k2_minus_edge(static_cast<int>(n))));
    discrete_worst = std::max(discrete_worst, std::abs(discrete_rh(a, b).distance - 1.0));
    const double smooth = smooth_rh(a, b).distance;
    if (n > 5 && !(smooth < prev)) {
      not_decreasing.push_back("n=" + std::to_string(n - 1) + "->" + std::to_string(n) + ": " +
                               fmt("%.6g", prev) + " -> " + fmt("%.6g", smooth));
    }
    prev = smooth;
  }
  v.pass = v.pass && discrete_worst <= kExactTol && not_decreasing.empty();
  v.detail += "; bipartite discrete max error " + fmt("%.3g", discrete_worst);
  if (not_decreasing.empty()) {
    v.detail += "; smooth strictly decreasing";
  } else {
    v.detail += "; smooth not strictly decreasing at";
    for (const auto& s : not_decreasing) v.detail += " " + s;
  }
  return v;
}

Verdict max_rh_enumeration() {
  Clock clock;
  std::vector<std::vector<Ccdh>> by_size(8);
  std::size_t total = 0;
  for (int n = 2; n <= 7; ++n) {
    by_size[n] = testing::graphical_ccdhs(n);
    total += by_size[n].size();
  }
  double worst = 0.0;
  for (int n = 2; n <= 7; ++n) {
    for (int m = n; m <= 7; ++m) {
      double best = 0.0;
      for (const auto& f : by_size[n]) {
        for (const auto& g : by_size[m]) best = std::max(best, smooth_rh(f, g).distance);
      }
      worst = std::max(worst, std::abs(best - max_rh(n, m)));
    }
  }
  const double t = clock.seconds();
  return {worst <= kExactTol && t < kMaxRhBudgetSec,
          std::to_string(total) + " graphical ccdhs, max error " + fmt("%.3g", worst) + ", " +
              fmt("%.3f", t) + " s"};
}

Verdict edge_perturbation() {
  Verdict v;
  std::mt19937_64 rng(2024);
  double star_worst = 0.0;
  double random_max = 0.0;
  int trials = 0;
  for (Degree n = 5; n <= 9; ++n) {
    for (Degree k = 3; k <= n - 1; ++k) {
      if (k < n - 1 && (n - 1 - k) % 2 != 0) continue;
      const auto c = family_ccdh(FamilySpec::star_degreed(n, k));
      const double eps = smooth_rh(c, perturbed_ccdh(c, {PerturbMode::kAdd, 1, 1, 1})).distance;
      star_worst = std::max(star_worst, std::abs(eps - 0.4));
    }
    for (int t = 0; t < 1000;) {
      const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
      const auto g = testing::random_graph(static_cast<int>(n), p, rng);
      if (!g || perturbation_classes(*g, PerturbMode::kAdd).empty()) continue;
      random_max = std::max(random_max, perturb_stats(*g, PerturbMode::kAdd).max_eps);
      ++t;
      ++trials;
    }
  }
  v.pass = star_worst <= kExactTol && random_max <= 0.4 + kExactTol;
  v.detail = "star-degreed max error " + fmt("%.3g", star_worst) + "; " + std::to_string(trials) +
             " random graphs, largest single-edge addition " + fmt("%.12g", random_max);
  return v;
}

Verdict density_construction() {
  Verdict v;
  double worst = 0.0;
  std::string tail_note;
  for (double c : {0.5, 1.0 / 3.0, 0.25, 0.37}) {
    for (int i = 1; i <= 5; ++i) {
      const auto p = density_pair(c, i);
      worst = std::max(worst, std::abs(smooth_rh(p.f, p.g).distance - p.tau));
    }
    // Gap sequence |tau_i / n_i - c| over a longer horizon.
    constexpr int kHorizon = 40;
    std::vector<double> gap;
    for (int i = 1; i <= kHorizon; ++i) {
      const auto p = density_pair(c, i);
      gap.push_back(std::abs(p.tau / static_cast<double>(p.n) - c));
    }
    // Tail suprema over the horizon must be nonincreasing for i = 1..5 and
    // shrink overall.
    std::vector<double> tail(kHorizon);
    tail[kHorizon - 1] = gap[kHorizon - 1];
    for (int i = kHorizon - 2; i >= 0; --i) tail[i] = std::max(gap[i], tail[i + 1]);
    bool ok = tail[kHorizon - 1] < tail[0];
    for (int i = 1; i < 5; ++i) ok = ok && tail[i] <= tail[i - 1];
    // Exact reciprocals additionally decrease pointwise.
    const double inv = 1.0 / c;
    if (std::abs(inv - std::round(inv)) < 1e-9) {
      for (int i = 1; i < 5; ++i) ok = ok && gap[i] < gap[i - 1];
    }
    if (!ok) {
      v.pass = false;
      tail_note += " c=" + fmt("%g", c) + " not monotone;";
    }
  }
  v.pass = v.pass && worst <= kExactTol;
  v.detail = "20 pairs, max |rh - tau| " + fmt("%.3g", worst) + "; gap to c " +
             (tail_note.empty() ? std::string("monotone in the tail") : tail_note);
  return v;
}

Verdict oracle_equivalence() {
  std::mt19937_64 rng(8);
  const double ps[] = {0.1, 0.5, 0.9};
  double worst = 0.0;
  int pairs = 0;
  while (pairs < 200) {
    const int na = std::uniform_int_distribution<int>(2, 40)(rng);
    const int nb = std::uniform_int_distribution<int>(2, 40)(rng);
    const auto ga = testing::random_graph(na, ps[pairs % 3], rng);
    const auto gb = testing::random_graph(nb, ps[(pairs / 3) % 3], rng);
    if (!ga || !gb) continue;
    const auto f = graph_ccdh(*ga);
    const auto g = graph_ccdh(*gb);
    worst = std::max(worst, std::abs(smooth_rh(f, g).distance - oracle_smooth_rh(f, g)));
    ++pairs;
  }
  return {worst <= kOracleTol, "200 pairs, max |fast - oracle| " + fmt("%.3g", worst)};
}

Verdict linearity() {
  Verdict v;
  // Access bound on random ccdh pairs and on graph-like adversarial pairs
  // (stars against complete graphs force long searches).
  std::mt19937_64 rng(99);
  double ratio = 0.0;
  for (Degree delta = 256; delta <= 16384; delta *= 2) {
    for (int t = 0; t < 5; ++t) {
      const auto f = random_ccdh(delta, rng);
      const auto g = random_ccdh(std::uniform_int_distribution<Degree>(delta / 2, delta)(rng), rng);
      WorkCounter work;
      smooth_rh(f, g, work);
      ratio = std::max(ratio, static_cast<double>(work.loop_accesses) /
                                  static_cast<double>(f.max_degree() + g.max_degree()));
    }
    WorkCounter work;
    const auto s = family_ccdh(FamilySpec::star(delta + 1));
    const auto k = complete(delta + 1);
    smooth_rh(s, k, work);
    ratio = std::max(ratio, static_cast<double>(work.loop_accesses) /
                                static_cast<double>(s.max_degree() + k.max_degree()));
  }
  v.pass = ratio <= kWorkConstant;
  v.detail = "accesses/(Delta_F+Delta_G) <= " + fmt("%.4f", ratio) + " (C = " + fmt("%g", kWorkConstant) + ")";

  BenchOptions options;
  options.baseline = true;
  options.trials = 3;
  options.seed = 7;
  const auto rows = run_bench(options);
  double fast_growth = 0.0;
  double baseline_growth = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    fast_growth = std::max(fast_growth, rows[i].fast_seconds / rows[i - 1].fast_seconds);
    if (i + kBaselineTailDoublings >= rows.size()) {
      baseline_growth = std::min(baseline_growth, rows[i].baseline_seconds / rows[i - 1].baseline_seconds);
    }
  }
  v.pass = v.pass && fast_growth <= kFastGrowthMax && baseline_growth >= kBaselineGrowthMin;
  v.detail += "; fast growth per doubling <= " + fmt("%.2f", fast_growth) +
              ", baseline growth at largest sizes >= " + fmt("%.2f", baseline_growth);
  return v;
}

std::vector<NamedCcdh> synthetic_corpus(const fs::path& dir) {
  fs::create_directories(dir);
  std::mt19937_64 rng(10);
  auto write = [&](const std::string& name, const std::vector<Edge>& edges) {
    std::ofstream out(dir / (name + ".txt"));
    out << "# synthetic\n";
    for (const auto& [u, w] : edges) out << u << '\t' << w << '\n';
  };
  write("complete12", family_edges(FamilySpec::complete(12)));
  write("cycle30", family_edges(FamilySpec::cycle(30)));
  write("star40", family_edges(FamilySpec::star(40)));
  write("bipartite_3_9", family_edges(FamilySpec::complete_bipartite(3, 9)));
  write("regular_20_6", family_edges(FamilySpec::regular(20, 6)));
  write("k2", {{0, 1}});
  for (int i = 0; i < 14; ++i) {
    const int n = std::uniform_int_distribution<int>(5, 120)(rng);
    auto edges = testing::random_edges(n, std::uniform_real_distribution<double>(0.02, 0.6)(rng), rng);
    if (edges.empty()) edges.push_back({0, 1});
    write("random" + std::to_string(i), edges);
  }
  return load_corpus(dir, false, 4);
}

Verdict corpus_matrix() {
  std::vector<NamedCcdh> entries;
  std::string source;
  const fs::path tmp = fs::temp_directory_path() / ("rhdist_acceptance_" + std::to_string(std::random_device{}()));
  if (const char* user = std::getenv("RHDIST_ACCEPTANCE_CORPUS"); user != nullptr && *user != '\0') {
    entries = load_corpus(user, false, default_jobs());
    source = user;
  } else {
    entries = synthetic_corpus(tmp);
    source = "synthetic corpus";
  }
  MatrixOptions options;
  options.jobs = 1;
  const auto serial = compute_matrix(entries, options);
  options.jobs = 8;
  const auto parallel = compute_matrix(entries, options);
  fs::remove_all(tmp);

  std::vector<Count> sizes(serial.size());
  for (const auto& e : entries) {
    const auto it = std::find(serial.names.begin(), serial.names.end(), e.name);
    sizes[static_cast<std::size_t>(it - serial.names.begin())] = e.ccdh[1];
  }
  bool ok = serial.values == parallel.values;
  const bool deterministic = ok;
  for (std::size_t i = 0; i < serial.size(); ++i) {
    ok = ok && serial.at(i, i) == 0.0;
    for (std::size_t j = 0; j < serial.size(); ++j) {
      const double bound = max_rh(std::min(sizes[i], sizes[j]), std::max(sizes[i], sizes[j]));
      ok = ok && serial.at(i, j) == serial.at(j, i) && serial.at(i, j) >= 0.0 &&
           serial.at(i, j) <= bound + kExactTol;
    }
  }
  return {ok, source + ", " + std::to_string(serial.size()) + " graphs, symmetric/zero-diagonal/bounded " +
                  (ok ? "yes" : "no") + ", jobs 1 vs 8 identical " + (deterministic ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"AC1 complete-graph closed form", complete_graphs},
      {"AC2 triangle-inequality counterexamples", triangle_counterexamples},
      {"AC3 complete vs cycle closed form", complete_cycle},
      {"AC4 star-degreed and bipartite perturbation", star_degreed_perturbation},
      {"AC5 maximum distance by exhaustive enumeration", max_rh_enumeration},
      {"AC6 single-edge addition extremality", edge_perturbation},
      {"AC7 density construction", density_construction},
      {"AC8 bisection oracle equivalence", oracle_equivalence},
      {"AC9 linear work and timing growth", linearity},
      {"AC10 corpus matrix invariants", corpus_matrix},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
