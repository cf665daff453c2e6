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

#include "rhdist/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "rhdist/error.hpp"

namespace rhdist {

// Accumulates labelled edges, then emits the simplified CSR graph.
class GraphBuilder {
 public:
  void add(std::string_view a, std::string_view b) {
    const Graph::Vertex u = intern(a);
    const Graph::Vertex v = intern(b);
    if (u == v) return;
    pairs_.emplace_back(std::min(u, v), std::max(u, v));
  }

  Graph build() && {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    if (pairs_.empty()) throw EmptyGraphError("empty graph: no edges after simplification");

    // Vertices seen only on self-loops are isolated; drop and relabel.
    std::vector<Graph::Vertex> remap(labels_.size(), kUnused);
    Graph g;
    for (const auto& [u, v] : pairs_) {
      for (const Graph::Vertex w : {u, v}) {
        if (remap[w] == kUnused) {
          remap[w] = static_cast<Graph::Vertex>(g.labels_.size());
          g.labels_.push_back(std::move(labels_[w]));
        }
      }
    }
    const std::size_t n = g.labels_.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : pairs_) {
      ++g.offsets_[remap[u] + 1];
      ++g.offsets_[remap[v] + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : pairs_) {
      g.neighbors_[cursor[remap[u]]++] = remap[v];
      g.neighbors_[cursor[remap[v]]++] = remap[u];
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    }
    return g;
  }

 private:
  static constexpr Graph::Vertex kUnused = static_cast<Graph::Vertex>(-1);

  Graph::Vertex intern(std::string_view label) {
    auto [it, inserted] =
        ids_.try_emplace(std::string(label), static_cast<Graph::Vertex>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }

  std::unordered_map<std::string, Graph::Vertex> ids_;
  std::vector<std::string> labels_;
  std::vector<std::pair<Graph::Vertex, Graph::Vertex>> pairs_;
};

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

// Splits off up to `limit` whitespace-separated tokens.
std::size_t tokenize(std::string_view line, std::string_view* out, std::size_t limit) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (count < limit) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out[count++] = line.substr(start, i - start);
  }
  return count;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

Count parse_count(std::string_view token, std::size_t line_no) {
  Count value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph Graph::from_edges(std::span<const Edge> edges) {
  GraphBuilder builder;
  for (const auto& [u, v] : edges) builder.add(std::to_string(u), std::to_string(v));
  return std::move(builder).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (const Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeHistogram degree_histogram(const Graph& g) {
  std::map<Degree, Count> counts;
  for (Graph::Vertex v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
  return DegreeHistogram(std::move(counts));
}

Ccdh graph_ccdh(const Graph& g) { return ccdh_from_histogram(degree_histogram(g)); }

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  std::string_view tokens[2];
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == options.comment_prefix) continue;
    const std::size_t n = tokenize(line, tokens, 2);
    if (n == 0) continue;
    if (n == 1) throw ParseError("expected two vertex ids", line_no);
    builder.add(tokens[0], tokens[1]);
  }
  if (in.bad()) throw Error("read error in edge list");
  return std::move(builder).build();
}

Graph load_edge_list(const std::filesystem::path& path, const ParseOptions& options) {
  auto in = open_input(path);
  try {
    return parse_edge_list(in, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  } catch (const EmptyGraphError& e) {
    throw EmptyGraphError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    out << g.label(static_cast<Graph::Vertex>(u)) << '\t' << g.label(static_cast<Graph::Vertex>(v))
        << '\n';
  }
}

Ccdh read_ccdh(std::istream& in) {
  std::vector<Count> values;
  std::string line;
  std::size_t line_no = 0;
  std::string_view tokens[3];
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    const std::size_t n = tokenize(line, tokens, 3);
    if (n == 0) continue;
    if (n != 2) throw ParseError("expected 'k<TAB>N(k)'", line_no);
    const Count k = parse_count(tokens[0], line_no);
    const Count value = parse_count(tokens[1], line_no);
    if (k != static_cast<Count>(values.size()) + 1) {
      throw ParseError("expected degree " + std::to_string(values.size() + 1) + ", got " +
                           std::to_string(k),
                       line_no);
    }
    if (value < 1) throw ParseError("N(k) must be positive", line_no);
    if (!values.empty() && value > values.back()) {
      throw ParseError("N(k) increases (ccdh must be nonincreasing)", line_no);
    }
    values.push_back(value);
  }
  if (in.bad()) throw Error("read error in ccdh file");
  if (values.empty()) throw ParseError("ccdh file has no entries", 0);
  return Ccdh(std::move(values));
}

void write_ccdh(std::ostream& out, const Ccdh& c) {
  for (Degree k = 1; k <= c.max_degree(); ++k) out << k << '\t' << c[k] << '\n';
}

Ccdh load_ccdh(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return read_ccdh(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void save_ccdh(const Ccdh& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_ccdh(out, c);
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  std::vector<CorpusEntry> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext != ".txt" && ext != ".tsv") continue;
    out.push_back({entry.path().stem().string(), entry.path()});
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace rhdist
