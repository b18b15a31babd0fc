#include "seidel/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace seidel {

ColoredGraph::ColoredGraph(int vertex_count, std::vector<int> color_of)
    : v_(vertex_count), words_((vertex_count + 63) / 64),
      color_of_(std::move(color_of)),
      rows_(static_cast<std::size_t>(vertex_count) * ((vertex_count + 63) / 64), 0) {
  if (v_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (static_cast<int>(color_of_.size()) != v_)
    throw std::invalid_argument("color vector has wrong length");
  colors_ = 1 + *std::max_element(color_of_.begin(), color_of_.end());
}

void ColoredGraph::add_edge(int u, int w) {
  rows_[static_cast<std::size_t>(u) * words_ + (w >> 6)] |= std::uint64_t(1) << (w & 63);
  rows_[static_cast<std::size_t>(w) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

int ColoredGraph::degree(int u) const {
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += __builtin_popcountll(rows_[static_cast<std::size_t>(u) * words_ + w]);
  return d;
}

ColoredGraph encode_colored(const SeidelMatrix& s) {
  int n = s.order();
  std::vector<int> colors(3 * n, 1);
  std::fill(colors.begin(), colors.begin() + n, 0);
  ColoredGraph g(3 * n, std::move(colors));
  auto pair_vertex = [n](int i, int k) { return n + 2 * i + k; };
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, pair_vertex(i, 0));
    g.add_edge(i, pair_vertex(i, 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (s.sign(i, j) > 0) {
        g.add_edge(pair_vertex(i, 0), pair_vertex(j, 0));
        g.add_edge(pair_vertex(i, 1), pair_vertex(j, 1));
      } else {
        g.add_edge(pair_vertex(i, 0), pair_vertex(j, 1));
        g.add_edge(pair_vertex(i, 1), pair_vertex(j, 0));
      }
    }
  return g;
}

SeidelMatrix decode_colored(const ColoredGraph& g) {
  int v = g.vertex_count();
  if (v % 3 != 0) throw std::invalid_argument("vertex count not divisible by 3");
  int n = v / 3;
  std::vector<int> us, vs;
  for (int x = 0; x < v; ++x) {
    if (g.color(x) == 0)
      us.push_back(x);
    else if (g.color(x) == 1)
      vs.push_back(x);
    else
      throw std::invalid_argument("unexpected color class");
  }
  if (static_cast<int>(us.size()) != n || static_cast<int>(vs.size()) != 2 * n)
    throw std::invalid_argument("color classes have wrong sizes");

  // Each color-0 vertex must have exactly two neighbors, both color 1 and
  // mutually non-adjacent; each color-1 vertex belongs to exactly one pair.
  std::vector<int> pair0(n, -1), pair1(n, -1), owner(v, -1);
  for (int i = 0; i < n; ++i) {
    int a = -1, b = -1;
    for (int x = 0; x < v; ++x) {
      if (!g.adjacent(us[i], x)) continue;
      if (g.color(x) != 1) throw std::invalid_argument("row vertex adjacent to color 0");
      if (a < 0)
        a = x;
      else if (b < 0)
        b = x;
      else
        throw std::invalid_argument("row vertex has degree above 2");
    }
    if (b < 0) throw std::invalid_argument("row vertex has degree below 2");
    if (g.adjacent(a, b)) throw std::invalid_argument("pair vertices are adjacent");
    if (owner[a] >= 0 || owner[b] >= 0)
      throw std::invalid_argument("pair vertex shared between rows");
    owner[a] = owner[b] = i;
    pair0[i] = a;
    pair1[i] = b;
  }
  for (int x : vs)
    if (owner[x] < 0) throw std::invalid_argument("unattached pair vertex");

  SeidelMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool p00 = g.adjacent(pair0[i], pair0[j]);
      bool p01 = g.adjacent(pair0[i], pair1[j]);
      bool p10 = g.adjacent(pair1[i], pair0[j]);
      bool p11 = g.adjacent(pair1[i], pair1[j]);
      if (p00 && p11 && !p01 && !p10)
        t.set_sign(i, j, 1);
      else if (p01 && p10 && !p00 && !p11)
        t.set_sign(i, j, -1);
      else
        throw std::invalid_argument("pair adjacency is neither parallel nor crossed");
    }
  return t;
}

}  // namespace seidel
