#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netbayes {

// Binary graph on n nodes, no self-loops, adjacency bit-packed per row.
// Node indices are 0-based everywhere in the API; file formats are 1-based.
class Graph {
 public:
  Graph(int n, bool directed);

  // Parse a whitespace 0/1 matrix after skipping `skip_lines` lines.
  // Rejects non-square input, non-binary tokens, nonzero diagonal, and
  // asymmetry when an undirected graph was requested.
  static Graph from_matrix_text(std::istream& in, int skip_lines, bool directed);
  static Graph from_matrix_file(const std::string& path, int skip_lines, bool directed);

  // Build from 1-based (i, j) pairs (the external edge-list convention).
  // Duplicates are idempotent; self-loops and out-of-range indices throw.
  static Graph from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                              int n, bool directed);
  // Edge-list text: one "i j" pair per line, 1-based. n < 0 infers the node
  // count from the largest index seen.
  static Graph from_edge_list_text(std::istream& in, int n, bool directed);
  static Graph from_edge_list_file(const std::string& path, int n, bool directed);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  long long dyad_count() const {
    const long long nn = n_;
    return directed_ ? nn * (nn - 1) : nn * (nn - 1) / 2;
  }

  bool edge(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void toggle(int i, int j);
  void set_edge(int i, int j, bool present);

  long long edge_count() const { return m_; }
  int degree(int i) const { return deg_[i]; }
  std::vector<int> neighbors(int i) const;
  double density() const;
  // Undirected: i < j pairs. Directed: all ordered pairs with y_ij = 1.
  std::vector<std::pair<int, int>> edges() const;

  std::span<const uint64_t> row(int i) const {
    return {bits_.data() + static_cast<size_t>(i) * wpr_,
            static_cast<size_t>(wpr_)};
  }
  int words_per_row() const { return wpr_; }

  bool operator==(const Graph& other) const = default;

  // Matrix serialization (no header) and 1-based edge-list serialization.
  void write_matrix(std::ostream& out) const;
  void write_edge_list(std::ostream& out) const;

 private:
  void check_pair(int i, int j) const;

  int n_ = 0;
  bool directed_ = false;
  int wpr_ = 0;
  long long m_ = 0;
  std::vector<int> deg_;
  std::vector<uint64_t> bits_;
};

}  // namespace netbayes
