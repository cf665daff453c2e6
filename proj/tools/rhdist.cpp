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

// rhdist: relative Hausdorff distance between graph degree distributions.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rhdist/bench.hpp"
#include "rhdist/ccdh.hpp"
#include "rhdist/closed_forms.hpp"
#include "rhdist/error.hpp"
#include "rhdist/families.hpp"
#include "rhdist/graph_io.hpp"
#include "rhdist/matrix.hpp"
#include "rhdist/perturb.hpp"
#include "rhdist/rh.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

rhdist::Ccdh load_input(const std::string& path, bool ccdh_input) {
  return ccdh_input ? rhdist::load_ccdh(path) : rhdist::graph_ccdh(rhdist::load_edge_list(path));
}

struct DistArgs {
  std::string a, b;
  bool discrete = false;
  bool directional = false;
  bool normalized = false;
  bool ccdh_input = false;
};

void run_dist(const DistArgs& args) {
  const auto f = load_input(args.a, args.ccdh_input);
  const auto g = load_input(args.b, args.ccdh_input);
  const auto r = args.discrete ? rhdist::discrete_rh(f, g) : rhdist::smooth_rh(f, g);
  if (!args.directional && !args.normalized) {
    std::cout << fmt(r.distance) << '\n';
    return;
  }
  std::cout << "distance\t" << fmt(r.distance) << '\n';
  if (args.directional) {
    std::cout << "forward\t" << fmt(r.forward) << '\n';
    std::cout << "backward\t" << fmt(r.backward) << '\n';
  }
  if (args.normalized) std::cout << "normalized\t" << fmt(rhdist::normalized_ratio(f, g)) << '\n';
}

struct MatrixArgs {
  std::string dir;
  std::string out;
  std::string sort = "name";
  std::size_t jobs = 0;
  bool normalized = false;
  bool ccdh_input = false;
};

void run_matrix(const MatrixArgs& args) {
  rhdist::MatrixOptions options;
  options.jobs = args.jobs == 0 ? rhdist::default_jobs() : args.jobs;
  options.normalized = args.normalized;
  options.sort = args.sort == "maxdeg" ? rhdist::MatrixSort::kMaxDegree : rhdist::MatrixSort::kName;
  auto report = rhdist::compute_matrix(rhdist::load_corpus(args.dir, args.ccdh_input, options.jobs),
                                       options);
  std::ostream* summary = &std::cerr;
  if (args.out.empty() || args.out == "-") {
    rhdist::write_matrix(std::cout, report);
  } else {
    std::ofstream out(args.out);
    if (!out) throw rhdist::Error("cannot write " + args.out);
    rhdist::write_matrix(out, report);
    summary = &std::cout;
  }
  const auto& s = report.summary;
  *summary << "graphs\t" << report.size() << "\nmin\t" << fmt(s.min) << "\nmax\t" << fmt(s.max)
           << "\nmean\t" << fmt(s.mean) << "\nmedian\t" << fmt(s.median) << '\n';
}

void run_perturb(const std::string& path, const std::string& mode) {
  const auto g = rhdist::load_edge_list(path);
  std::vector<rhdist::PerturbMode> modes;
  if (mode == "add" || mode == "both") modes.push_back(rhdist::PerturbMode::kAdd);
  if (mode == "delete" || mode == "both") modes.push_back(rhdist::PerturbMode::kDelete);
  std::cout << "mode\tmax_eps\targmax\tavg_eps\tclasses\n";
  for (const auto m : modes) {
    if (rhdist::perturbation_classes(g, m).empty()) {
      std::cout << rhdist::to_string(m) << "\tno applicable perturbations\n";
      continue;
    }
    const auto s = rhdist::perturb_stats(g, m);
    std::cout << rhdist::to_string(m) << '\t' << fmt(s.max_eps) << "\t(" << s.argmax.a << ","
              << s.argmax.b << ")\t" << fmt(s.avg_eps) << '\t' << s.class_count << '\n';
  }
}

std::optional<double> closed_form(const rhdist::FamilySpec& x, const rhdist::FamilySpec& y) {
  using rhdist::FamilyKind;
  if (x.kind == FamilyKind::kComplete && y.kind == FamilyKind::kComplete && x.a >= 3 &&
      y.a >= 3) {
    return rhdist::rh_complete_complete(std::min(x.a, y.a), std::max(x.a, y.a));
  }
  if (x.kind == FamilyKind::kComplete && y.kind == FamilyKind::kCycle && x.a >= 3) {
    return rhdist::rh_complete_cycle(x.a, y.a);
  }
  if (x.kind == FamilyKind::kCycle && y.kind == FamilyKind::kComplete && y.a >= 3) {
    return rhdist::rh_complete_cycle(y.a, x.a);
  }
  return std::nullopt;
}

void run_families(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw rhdist::ParameterError("families: expected arguments");
  const std::string& head = tokens.front();
  auto integer = [&](std::size_t i) -> rhdist::Degree {
    if (i >= tokens.size()) throw rhdist::ParameterError(head + ": missing parameter");
    return std::stoll(tokens[i]);
  };

  if (head == "maxrh") {
    std::cout << "max_rh\t" << fmt(rhdist::max_rh(integer(1), integer(2))) << '\n';
    return;
  }
  if (head == "density") {
    if (tokens.size() < 3) throw rhdist::ParameterError("density: expected c and i");
    const auto p = rhdist::density_pair(std::stod(tokens[1]), static_cast<int>(integer(2)));
    const double alg = rhdist::smooth_rh_distance(p.f, p.g);
    std::cout << "n\t" << p.n << "\nk\t" << p.k << "\nr\t" << p.r << "\ntau\t" << fmt(p.tau)
              << "\nalgorithm\t" << fmt(alg) << "\nagree\t"
              << (std::abs(alg - p.tau) <= 1e-9 ? "yes" : "no") << '\n';
    return;
  }
  if (head == "starpert") {
    const rhdist::Degree n = integer(1);
    const auto cf = rhdist::star_perturbation_values(n);
    const auto s = rhdist::family_ccdh(rhdist::FamilySpec::star(n));
    const auto star = rhdist::perturbed_ccdh(s, {rhdist::PerturbMode::kAdd, 1, 1, 1});
    const auto sm = rhdist::smooth_rh(s, star);
    const auto dc = rhdist::discrete_rh(s, star);
    std::cout << "quantity\tclosed_form\talgorithm\n"
              << "smooth S->S*\t" << fmt(cf.smooth_forward) << '\t' << fmt(sm.forward) << '\n'
              << "smooth S*->S\t" << fmt(cf.smooth_backward) << '\t' << fmt(sm.backward) << '\n'
              << "discrete S->S*\t" << fmt(cf.discrete_forward) << '\t' << fmt(dc.forward) << '\n'
              << "discrete S*->S\t" << fmt(cf.discrete_backward) << '\t' << fmt(dc.backward)
              << '\n';
    return;
  }

  std::size_t pos = 0;
  const auto x = rhdist::parse_family(tokens, pos);
  const auto y = rhdist::parse_family(tokens, pos);
  if (pos != tokens.size()) throw rhdist::ParameterError("families: unexpected trailing arguments");
  const auto cf = closed_form(x, y);
  const double alg = rhdist::smooth_rh_distance(rhdist::family_ccdh(x), rhdist::family_ccdh(y));
  std::cout << "closed_form\t" << (cf ? fmt(*cf) : std::string("NA")) << "\nalgorithm\t"
            << fmt(alg) << '\n';
}

void run_bench(const std::vector<rhdist::Degree>& sizes, int trials, bool baseline,
               std::uint64_t seed) {
  rhdist::BenchOptions options;
  if (!sizes.empty()) options.sizes = sizes;
  options.trials = trials;
  options.baseline = baseline;
  options.seed = seed;
  const auto rows = rhdist::run_bench(options);
  rhdist::write_bench(std::cout, rows);
  // Smallest C with accesses <= C * (Delta_F + Delta_G) on every row.
  double fitted = 0.0;
  for (const auto& row : rows) fitted = std::max(fitted, row.access_ratio);
  std::cout << "# fitted_C\t" << fmt(fitted) << '\n';
}

void run_ccdh(const std::string& path, const std::string& out, bool ccdh_input) {
  const auto c = load_input(path, ccdh_input);
  if (out.empty() || out == "-") {
    rhdist::write_ccdh(std::cout, c);
  } else {
    rhdist::save_ccdh(c, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Hausdorff distance between graph degree distributions"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two graphs");
  dist_cmd->add_option("graph_a", dist.a, "First edge list (or ccdh file)")->required();
  dist_cmd->add_option("graph_b", dist.b, "Second edge list (or ccdh file)")->required();
  dist_cmd->add_flag("--discrete", dist.discrete, "Discrete instead of smooth distance");
  dist_cmd->add_flag("--directional", dist.directional, "Also print both directional values");
  dist_cmd->add_flag("--normalized", dist.normalized, "Also print the ratio to the maximum");
  dist_cmd->add_flag("--ccdh-input", dist.ccdh_input, "Inputs are ccdh TSV files");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Pairwise distance matrix over a corpus");
  matrix_cmd->add_option("corpus_dir", matrix.dir, "Directory of *.txt / *.tsv files")->required();
  matrix_cmd->add_option("--out", matrix.out, "Matrix output file (default stdout)");
  matrix_cmd->add_option("--sort", matrix.sort, "Row order")
      ->check(CLI::IsMember({"name", "maxdeg"}));
  matrix_cmd->add_option("--jobs", matrix.jobs, "Worker threads (default $RHDIST_JOBS)")
      ->check(CLI::PositiveNumber);
  matrix_cmd->add_flag("--normalized", matrix.normalized, "Divide by the maximum possible value");
  matrix_cmd->add_flag("--ccdh-input", matrix.ccdh_input, "Corpus files are ccdh TSV files");

  std::string perturb_graph;
  std::string perturb_mode = "both";
  auto* perturb_cmd = app.add_subcommand("perturb", "Single-edge perturbation scan");
  perturb_cmd->add_option("graph", perturb_graph, "Edge list")->required();
  perturb_cmd->add_option("--mode", perturb_mode, "add, delete or both")
      ->check(CLI::IsMember({"add", "delete", "both"}));

  std::vector<std::string> family_tokens;
  auto* families_cmd = app.add_subcommand(
      "families",
      "Closed forms vs algorithm: '<family> <family>', 'maxrh n m', 'density c i', "
      "'starpert n'");
  families_cmd->add_option("args", family_tokens, "Family pair or formula with parameters")
      ->required();

  std::vector<rhdist::Degree> bench_sizes;
  int bench_trials = 3;
  bool bench_baseline = false;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Linear-time vs quadratic timing table");
  bench_cmd->add_option("--sizes", bench_sizes, "Maximum degrees to test")->delimiter(',');
  bench_cmd->add_option("--trials", bench_trials, "Random pairs per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--baseline", bench_baseline, "Also time the quadratic baseline");
  bench_cmd->add_option("--seed", bench_seed, "RNG seed");

  std::string ccdh_graph;
  std::string ccdh_out;
  bool ccdh_input = false;
  auto* ccdh_cmd = app.add_subcommand("ccdh", "Dump a graph's ccdh as TSV");
  ccdh_cmd->add_option("graph", ccdh_graph, "Edge list")->required();
  ccdh_cmd->add_option("--out,-o", ccdh_out, "Output file (default stdout)");
  ccdh_cmd->add_flag("--ccdh-input", ccdh_input, "Input is already a ccdh file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist_cmd) run_dist(dist);
    if (*matrix_cmd) run_matrix(matrix);
    if (*perturb_cmd) run_perturb(perturb_graph, perturb_mode);
    if (*families_cmd) run_families(family_tokens);
    if (*bench_cmd) run_bench(bench_sizes, bench_trials, bench_baseline, bench_seed);
    if (*ccdh_cmd) run_ccdh(ccdh_graph, ccdh_out, ccdh_input);
  } catch (const rhdist::Error& e) {
    std::cerr << "rhdist: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "rhdist: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
