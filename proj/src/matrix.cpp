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

#include "rhdist/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "rhdist/closed_forms.hpp"
#include "rhdist/error.hpp"
#include "rhdist/graph_io.hpp"
#include "rhdist/rh.hpp"

namespace rhdist {
namespace {

// Runs task(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any task is rethrown on the calling thread.
template <typename Task>
void parallel_for(std::size_t count, std::size_t jobs, Task task) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

}  // namespace

std::size_t default_jobs() {
  if (const char* env = std::getenv("RHDIST_JOBS"); env != nullptr) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MatrixReport compute_matrix(std::vector<NamedCcdh> entries, const MatrixOptions& options) {
  if (entries.size() < 2) throw Error("matrix needs at least two graphs");
  if (options.sort == MatrixSort::kName) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const NamedCcdh& a, const NamedCcdh& b) { return a.name < b.name; });
  } else {
    std::stable_sort(entries.begin(), entries.end(), [](const NamedCcdh& a, const NamedCcdh& b) {
      if (a.ccdh.max_degree() != b.ccdh.max_degree()) {
        return a.ccdh.max_degree() < b.ccdh.max_degree();
      }
      return a.name < b.name;
    });
  }

  const std::size_t n = entries.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  MatrixReport report;
  report.values.assign(n * n, 0.0);
  parallel_for(pairs.size(), options.jobs, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const Ccdh& f = entries[i].ccdh;
    const Ccdh& g = entries[j].ccdh;
    const double v = options.normalized ? normalized_ratio(f, g) : smooth_rh_distance(f, g);
    report.values[i * n + j] = v;
    report.values[j * n + i] = v;
  });
  for (auto& e : entries) report.names.push_back(std::move(e.name));
  report.summary = summarize(report);
  return report;
}

MatrixSummary summarize(const MatrixReport& report) {
  const std::size_t n = report.size();
  std::vector<double> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(report.at(i, j));
  }
  MatrixSummary s;
  if (upper.empty()) return s;
  double total = 0.0;
  for (double v : upper) total += v;
  std::sort(upper.begin(), upper.end());
  s.min = upper.front();
  s.max = upper.back();
  s.mean = total / static_cast<double>(upper.size());
  const std::size_t mid = upper.size() / 2;
  s.median = upper.size() % 2 == 1 ? upper[mid] : 0.5 * (upper[mid - 1] + upper[mid]);
  return s;
}

void write_matrix(std::ostream& out, const MatrixReport& report) {
  out << "name";
  for (const auto& name : report.names) out << '\t' << name;
  out << '\n';
  for (std::size_t i = 0; i < report.size(); ++i) {
    out << report.names[i];
    for (std::size_t j = 0; j < report.size(); ++j) out << '\t' << format_value(report.at(i, j));
    out << '\n';
  }
}

MatrixReport read_matrix(std::istream& in) {
  MatrixReport report;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("matrix file is empty", 0);
  auto header = split_tabs(line);
  if (header.size() < 2) throw ParseError("matrix header has no names", 1);
  report.names.assign(header.begin() + 1, header.end());
  const std::size_t n = report.names.size();
  report.values.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!std::getline(in, line)) throw ParseError("matrix has too few rows", row + 2);
    const auto cells = split_tabs(line);
    if (cells.size() != n + 1) throw ParseError("matrix row has the wrong width", row + 2);
    if (cells[0] != report.names[row]) throw ParseError("row name does not match header", row + 2);
    for (std::size_t j = 1; j <= n; ++j) {
      try {
        report.values.push_back(std::stod(cells[j]));
      } catch (const std::exception&) {
        throw ParseError("bad matrix value '" + cells[j] + "'", row + 2);
      }
    }
  }
  report.summary = summarize(report);
  return report;
}

std::vector<NamedCcdh> load_corpus(const std::filesystem::path& dir, bool ccdh_input,
                                   std::size_t jobs) {
  const auto files = list_corpus(dir);
  std::vector<std::optional<Ccdh>> loaded(files.size());
  parallel_for(files.size(), jobs, [&](std::size_t i) {
    loaded[i] = ccdh_input ? load_ccdh(files[i].path) : graph_ccdh(load_edge_list(files[i].path));
  });
  std::vector<NamedCcdh> out;
  out.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) out.push_back({files[i].name, std::move(*loaded[i])});
  return out;
}

}  // namespace rhdist
