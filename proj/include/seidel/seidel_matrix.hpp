#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace seidel {

/// Symmetric n x n matrix with zero diagonal and +-1 entries elsewhere.
/// Only the strict upper triangle is stored, packed column by column
/// (for j = 1..n-1, for i = 0..j-1); a set bit encodes the entry -1.
class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  explicit SeidelMatrix(int n) : n_(n), bits_((tri_count(n) + 63) / 64, 0) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
  }

  int order() const { return n_; }

  static std::size_t tri_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }
  static std::size_t tri_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }

  bool bit(std::size_t k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
  void set_bit(std::size_t k, bool b) {
    std::uint64_t m = std::uint64_t(1) << (k & 63);
    if (b)
      bits_[k >> 6] |= m;
    else
      bits_[k >> 6] &= ~m;
  }

  /// Entry S_ij: +-1 off the diagonal, 0 on it.
  int sign(int i, int j) const {
    if (i == j) return 0;
    return bit(tri_index(i, j)) ? -1 : 1;
  }
  void set_sign(int i, int j, int s) {
    if (i == j) throw std::invalid_argument("diagonal entries are fixed at 0");
    set_bit(tri_index(i, j), s < 0);
  }

  /// Matrix of order n+1 with this as the leading block and the given
  /// signs (+-1) in the appended last row and column.
  SeidelMatrix extended(const std::vector<int>& new_row) const {
    if (static_cast<int>(new_row.size()) != n_)
      throw std::invalid_argument("new row has wrong length");
    SeidelMatrix r(n_ + 1);
    std::copy(bits_.begin(), bits_.end(), r.bits_.begin());
    for (int i = 0; i < n_; ++i) r.set_sign(i, n_, new_row[i]);
    return r;
  }

  /// Principal submatrix obtained by deleting one row and column.
  SeidelMatrix deleted(int row) const {
    if (n_ < 2) throw std::invalid_argument("cannot delete from order 1");
    SeidelMatrix r(n_ - 1);
    for (int j = 1, jj = 0; j < n_; ++j) {
      if (j == row) continue;
      int ii = 0;
      for (int i = 0; i < j; ++i) {
        if (i == row) continue;
        r.set_sign(ii, jj, sign(i, j));
        ++ii;
      }
      ++jj;
    }
    return r;
  }

  SeidelMatrix negated() const {
    SeidelMatrix r(n_);
    for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = ~bits_[w];
    r.trim();
    return r;
  }

  /// Re-sign row/column i (multiply by -1), i.e. switching at i.
  SeidelMatrix switched(int i) const {
    SeidelMatrix r = *this;
    for (int j = 0; j < n_; ++j)
      if (j != i) r.set_sign(i, j, -sign(i, j));
    return r;
  }

  const std::vector<std::uint64_t>& words() const { return bits_; }

  friend bool operator==(const SeidelMatrix& a, const SeidelMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const SeidelMatrix& a, const SeidelMatrix& b) {
    return !(a == b);
  }
  friend bool operator<(const SeidelMatrix& a, const SeidelMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

 private:
  void trim() {
    std::size_t nb = tri_count(n_);
    if (nb % 64) bits_.back() &= (std::uint64_t(1) << (nb % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Signed permutation: a bijection of {0..n-1} together with per-index sign
/// flips. Conjugation by it is the equivalence operation on Seidel matrices.
struct SignedPermutation {
  std::vector<int> perm;       // perm[i] = image of index i
  std::vector<std::uint8_t> flip;  // flip[i] != 0 negates row/column i

  explicit SignedPermutation(int n) : perm(n), flip(n, 0) {
    for (int i = 0; i < n; ++i) perm[i] = i;
  }
  SignedPermutation(std::vector<int> p, std::vector<std::uint8_t> f)
      : perm(std::move(p)), flip(std::move(f)) {}

  int order() const { return static_cast<int>(perm.size()); }

  /// this after g: (this*g)(i) = this(g(i)).
  SignedPermutation composed(const SignedPermutation& g) const;
  SignedPermutation inverse() const;
};

/// PSP^T for the signed permutation matrix P with P e_i = s_i e_{perm[i]}.
SeidelMatrix apply(const SeidelMatrix& s, const SignedPermutation& g);

/// Seidel matrix of order a*b built as J_a (x) (J_b - 2 I_b) + I_ab.
SeidelMatrix k_construction(int a, int b);

/// J_a (x) (S - I) + I of order a*n; the identity for a = 1.
SeidelMatrix blowup(const SeidelMatrix& s, int a);

/// Adjacency rows of the graph read directly off S (edge iff S_ij = -1).
class AmbientGraph {
 public:
  explicit AmbientGraph(const SeidelMatrix& s);
  /// Graph of the switching-class member obtained by switching at W.
  AmbientGraph(const SeidelMatrix& s, const std::vector<std::uint8_t>& switch_set);

  int order() const { return n_; }
  bool adjacent(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  int degree(int i) const;
  bool is_regular() const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct SeidelMatrixHash {
  std::size_t operator()(const SeidelMatrix& s) const {
    std::size_t h = std::hash<int>()(s.order());
    for (auto w : s.words()) h = h * 1000003u ^ std::hash<std::uint64_t>()(w);
    return h;
  }
};

}  // namespace seidel
