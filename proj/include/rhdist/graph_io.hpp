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

#ifndef RHDIST_GRAPH_IO_HPP_
#define RHDIST_GRAPH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rhdist/ccdh.hpp"

namespace rhdist {

// Simple undirected graph over its non-isolated vertices, relabeled
// 0..n-1 in order of first appearance. Adjacency lists are sorted.
class Graph {
 public:
  using Vertex = std::uint32_t;

  // Drops self-loops and duplicate (in either orientation) edges. Labels
  // are the decimal ids. Throws EmptyGraphError if nothing remains.
  static Graph from_edges(std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  Degree degree(Vertex v) const noexcept {
    return static_cast<Degree>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;
  const std::string& label(Vertex v) const noexcept { return labels_[v]; }

  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  friend class GraphBuilder;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<std::string> labels_;
};

DegreeHistogram degree_histogram(const Graph& g);
Ccdh graph_ccdh(const Graph& g);

struct ParseOptions {
  char comment_prefix = '#';
};

// SNAP-style edge list: one edge per line, the first two whitespace-separated
// tokens are vertex ids (any string), further columns are ignored, lines
// starting with the comment prefix and blank lines are skipped. Direction,
// duplicates and self-loops are dropped. Throws ParseError (with the line
// number) on a one-token line and EmptyGraphError when no edge survives.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph load_edge_list(const std::filesystem::path& path, const ParseOptions& options = {});

// Writes "label<TAB>label" per edge, original labels.
void write_edge_list(std::ostream& out, const Graph& g);

// Ccdh text format: "k<TAB>N(k)" per line, k = 1..Delta ascending without
// gaps; '#' lines ignored. Throws ParseError on malformed, non-positive or
// increasing values.
Ccdh read_ccdh(std::istream& in);
void write_ccdh(std::ostream& out, const Ccdh& c);
Ccdh load_ccdh(const std::filesystem::path& path);
void save_ccdh(const Ccdh& c, const std::filesystem::path& path);

struct CorpusEntry {
  std::string name;  // file stem
  std::filesystem::path path;
};

// Every regular *.txt / *.tsv file directly inside `dir`, sorted by name.
std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir);

}  // namespace rhdist

#endif  // RHDIST_GRAPH_IO_HPP_
