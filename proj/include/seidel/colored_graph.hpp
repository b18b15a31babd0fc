#pragma once

#include <cstdint>
#include <vector>

#include "seidel/seidel_matrix.hpp"

namespace seidel {

/// Undirected graph with a partition of the vertices into ordered color
/// classes. The canonical labeling keeps the classes in order, so two
/// graphs compare equal only under color-preserving isomorphism.
class ColoredGraph {
 public:
  ColoredGraph(int vertex_count, std::vector<int> color_of);

  int vertex_count() const { return v_; }
  int words() const { return words_; }
  int color(int u) const { return color_of_[u]; }
  int color_count() const { return colors_; }

  void add_edge(int u, int w);
  bool adjacent(int u, int w) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (w >> 6)] >> (w & 63)) & 1u;
  }
  const std::uint64_t* row(int u) const {
    return rows_.data() + static_cast<std::size_t>(u) * words_;
  }
  int degree(int u) const;

 private:
  int v_;
  int words_;
  int colors_;
  std::vector<int> color_of_;
  std::vector<std::uint64_t> rows_;
};

/// Two-colored graph on 3n vertices that represents S faithfully:
/// vertex u_i = i (color 0) and v_i^(k) = n + 2i + k (color 1);
/// u_i is joined to its pair v_i^(0), v_i^(1), and the pairs of i and j
/// are joined in parallel when S_ij = 1 and crosswise when S_ij = -1.
ColoredGraph encode_colored(const SeidelMatrix& s);

/// Inverse of encode_colored up to equivalence. Validates the structure
/// and throws std::invalid_argument on malformed input.
SeidelMatrix decode_colored(const ColoredGraph& g);

}  // namespace seidel
