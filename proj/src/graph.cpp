#include "netbayes/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netbayes {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
  if (n < 1) throw std::invalid_argument("Graph: node count must be >= 1");
  wpr_ = (n + 63) / 64;
  deg_.assign(n, 0);
  bits_.assign(static_cast<size_t>(n) * wpr_, 0);
}

void Graph::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("Graph: node index out of range");
  if (i == j) throw std::invalid_argument("Graph: self-loops not allowed");
}

void Graph::toggle(int i, int j) {
  check_pair(i, j);
  const bool present = edge(i, j);
  set_edge(i, j, !present);
}

void Graph::set_edge(int i, int j, bool present) {
  check_pair(i, j);
  if (edge(i, j) == present) return;
  auto flip = [&](int a, int b) {
    bits_[static_cast<size_t>(a) * wpr_ + (b >> 6)] ^= (uint64_t{1} << (b & 63));
  };
  flip(i, j);
  if (present) {
    ++deg_[i];
    if (!directed_) {
      flip(j, i);
      ++deg_[j];
    }
  } else {
    --deg_[i];
    if (!directed_) {
      flip(j, i);
      --deg_[j];
    }
  }
  m_ += present ? 1 : -1;
}

std::vector<int> Graph::neighbors(int i) const {
  std::vector<int> out;
  out.reserve(deg_[i]);
  const auto r = row(i);
  for (int w = 0; w < wpr_; ++w) {
    uint64_t bitsw = r[w];
    while (bitsw) {
      const int b = std::countr_zero(bitsw);
      out.push_back(w * 64 + b);
      bitsw &= bitsw - 1;
    }
  }
  return out;
}

double Graph::density() const {
  return static_cast<double>(m_) / static_cast<double>(dyad_count());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int i = 0; i < n_; ++i) {
    for (int j : neighbors(i)) {
      if (directed_ || j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph Graph::from_matrix_text(std::istream& in, int skip_lines, bool directed) {
  std::string line;
  for (int k = 0; k < skip_lines; ++k) {
    if (!std::getline(in, line))
      throw std::runtime_error("matrix text: fewer lines than skip_lines");
  }
  std::vector<std::vector<int>> rows;
  size_t ncols = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> vals;
    std::string tok;
    while (ls >> tok) {
      if (tok == "0")
        vals.push_back(0);
      else if (tok == "1")
        vals.push_back(1);
      else
        throw std::runtime_error("matrix text: non-binary entry '" + tok + "'");
    }
    if (vals.empty()) continue;  // blank line
    if (rows.empty())
      ncols = vals.size();
    else if (vals.size() != ncols)
      throw std::runtime_error("matrix text: ragged rows (not a square matrix)");
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw std::runtime_error("matrix text: no data rows");
  if (rows.size() != ncols)
    throw std::runtime_error("matrix text: matrix is not square");
  const int n = static_cast<int>(ncols);
  Graph g(n, directed);
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != 0)
      throw std::runtime_error("matrix text: nonzero diagonal entry");
    for (int j = 0; j < n; ++j) {
      if (!directed && rows[i][j] != rows[j][i])
        throw std::runtime_error(
            "matrix text: asymmetric matrix for undirected graph");
      if (i != j && rows[i][j] == 1 && (directed || j > i))
        g.set_edge(i, j, true);
    }
  }
  return g;
}

Graph Graph::from_matrix_file(const std::string& path, int skip_lines,
                              bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return from_matrix_text(in, skip_lines, directed);
}

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& pairs,
                            int n, bool directed) {
  Graph g(n, directed);
  for (const auto& [i1, j1] : pairs) {
    if (i1 < 1 || j1 < 1 || i1 > n || j1 > n)
      throw std::out_of_range("edge list: index out of range (1-based)");
    if (i1 == j1) throw std::invalid_argument("edge list: self-loop pair");
    g.set_edge(i1 - 1, j1 - 1, true);
  }
  return g;
}

Graph Graph::from_edge_list_text(std::istream& in, int n, bool directed) {
  std::vector<std::pair<int, int>> pairs;
  int maxidx = 0;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b))
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected two indices");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": trailing token '" + extra + "'");
    if (a < 1 || b < 1)
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": indices are 1-based");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    maxidx = std::max(maxidx, static_cast<int>(std::max(a, b)));
  }
  if (n < 0) n = maxidx;
  if (n < 1) throw std::runtime_error("edge list: empty input and no node count");
  return from_edge_list(pairs, n, directed);
}

Graph Graph::from_edge_list_file(const std::string& path, int n, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return from_edge_list_text(in, n, directed);
}

void Graph::write_matrix(std::ostream& out) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << (i == j ? 0 : (edge(i, j) ? 1 : 0));
    }
    out << '\n';
  }
}

void Graph::write_edge_list(std::ostream& out) const {
  for (const auto& [i, j] : edges()) out << (i + 1) << ' ' << (j + 1) << '\n';
}

}  // namespace netbayes
