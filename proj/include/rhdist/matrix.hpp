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

#ifndef RHDIST_MATRIX_HPP_
#define RHDIST_MATRIX_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rhdist/ccdh.hpp"

namespace rhdist {

struct NamedCcdh {
  std::string name;
  Ccdh ccdh;
};

enum class MatrixSort { kName, kMaxDegree };

struct MatrixOptions {
  std::size_t jobs = 1;
  bool normalized = false;
  MatrixSort sort = MatrixSort::kName;
};

// Statistics over the off-diagonal upper triangle.
struct MatrixSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
};

// Symmetric pairwise matrix, zero diagonal, row-major.
struct MatrixReport {
  std::vector<std::string> names;
  std::vector<double> values;
  MatrixSummary summary;

  std::size_t size() const noexcept { return names.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * names.size() + j]; }
};

// Job count from RHDIST_JOBS, else hardware concurrency, else 1.
std::size_t default_jobs();

// Entries are reordered per options.sort (max degree ties broken by name).
// Pairs are evaluated on options.jobs worker threads; the result does not
// depend on the job count. Throws Error with fewer than two entries.
MatrixReport compute_matrix(std::vector<NamedCcdh> entries, const MatrixOptions& options);

MatrixSummary summarize(const MatrixReport& report);

// Tab-separated table with a header row and a leading name column; values
// formatted with %.12g.
void write_matrix(std::ostream& out, const MatrixReport& report);
MatrixReport read_matrix(std::istream& in);

// Reads every corpus file (edge lists, or ccdh files when ccdh_input) using
// up to `jobs` threads. Order follows list_corpus.
std::vector<NamedCcdh> load_corpus(const std::filesystem::path& dir, bool ccdh_input,
                                   std::size_t jobs);

}  // namespace rhdist

#endif  // RHDIST_MATRIX_HPP_
