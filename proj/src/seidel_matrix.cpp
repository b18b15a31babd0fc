#include "seidel/seidel_matrix.hpp"

namespace seidel {

SignedPermutation SignedPermutation::composed(const SignedPermutation& g) const {
  if (order() != g.order()) throw std::invalid_argument("order mismatch");
  int n = order();
  SignedPermutation r(n);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = perm[g.perm[i]];
    r.flip[i] = static_cast<std::uint8_t>(g.flip[i] ^ flip[g.perm[i]]);
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  int n = order();
  SignedPermutation r(n);
  for (int i = 0; i < n; ++i) {
    r.perm[perm[i]] = i;
    r.flip[perm[i]] = flip[i];
  }
  return r;
}

SeidelMatrix apply(const SeidelMatrix& s, const SignedPermutation& g) {
  int n = s.order();
  if (g.order() != n) throw std::invalid_argument("order mismatch");
  SeidelMatrix r(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int v = s.sign(i, j);
      if (g.flip[i]) v = -v;
      if (g.flip[j]) v = -v;
      r.set_sign(g.perm[i], g.perm[j], v);
    }
  return r;
}

SeidelMatrix k_construction(int a, int b) {
  if (a < 2 || b < 3) throw std::invalid_argument("k_construction needs a >= 2, b >= 3");
  int n = a * b;
  SeidelMatrix r(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      // entry of J_a (x) (J_b - 2 I_b) off the diagonal of the big matrix
      int i = x % b, j = y % b;
      r.set_sign(x, y, i == j ? -1 : 1);
    }
  return r;
}

SeidelMatrix blowup(const SeidelMatrix& s, int a) {
  if (a < 1) throw std::invalid_argument("blowup needs a >= 1");
  int b = s.order();
  int n = a * b;
  SeidelMatrix r(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int i = x % b, j = y % b;
      r.set_sign(x, y, i == j ? -1 : s.sign(i, j));
    }
  return r;
}

AmbientGraph::AmbientGraph(const SeidelMatrix& s)
    : AmbientGraph(s, std::vector<std::uint8_t>(s.order(), 0)) {}

AmbientGraph::AmbientGraph(const SeidelMatrix& s,
                           const std::vector<std::uint8_t>& switch_set)
    : n_(s.order()), words_((s.order() + 63) / 64),
      rows_(static_cast<std::size_t>(s.order()) * ((s.order() + 63) / 64), 0) {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int v = s.sign(i, j);
      if (switch_set[i] ^ switch_set[j]) v = -v;
      if (v < 0) {
        rows_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
        rows_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
      }
    }
}

int AmbientGraph::degree(int i) const {
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += __builtin_popcountll(rows_[static_cast<std::size_t>(i) * words_ + w]);
  return d;
}

bool AmbientGraph::is_regular() const {
  int d0 = degree(0);
  for (int i = 1; i < n_; ++i)
    if (degree(i) != d0) return false;
  return true;
}

}  // namespace seidel
