#ifndef APOLAR_EXACTLIN_HPP
#define APOLAR_EXACTLIN_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ContractViolation("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix from row vectors of common length `cols`.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw ContractViolation("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalVector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(r, c)) != 0) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  /// Stacks `below` under this matrix.
  RationalMatrix vstack(const RationalMatrix& below) const {
    if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
      throw ContractViolation("vstack: column mismatch");
    RationalMatrix out(rows_ + below.rows_, rows_ ? cols_ : below.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product: shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row vector times matrix.
inline RationalVector operator*(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw ContractViolation("vector-matrix product: shape mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

/// Matrix times column vector.
inline RationalVector apply(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw ContractViolation("matrix-vector product: shape mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row, so the
/// result is the unique rref of the input. Zero rows are kept at the bottom.
inline RrefResult rref(RationalMatrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

/// A linear subspace of Q^n stored canonically as the nonzero rows of its
/// rref basis. Two subspaces over the same frame are equal iff their bases
/// are entrywise equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row space of `rows`.
  static Subspace span(const RationalMatrix& rows) {
    auto r = rref(rows);
    Subspace s(rows.cols());
    s.basis_ = RationalMatrix(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), s.basis_.row(i).begin());
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace span(const std::vector<RationalVector>& vectors, std::size_t ambient_dim) {
    return span(RationalMatrix::from_rows(vectors, ambient_dim));
  }

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(RationalMatrix::identity(n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Remainder of `v` after eliminating the pivot columns of the basis.
  RationalVector reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw ContractViolation("subspace: vector length mismatch");
    RationalVector r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (sgn(f) == 0) continue;
      auto b = basis_.row(i);
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(b[j]) != 0) r[j] -= f * b[j];
    }
    return r;
  }

  bool contains(std::span<const Rational> v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  bool contains(const Subspace& other) const {
    check_frame(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_frame(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw ContractViolation("subspaces live in different frames");
  }

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {v : M v = 0}. One basis vector per free column, with
/// the free variable set to 1 and the other free variables to 0.
inline Subspace kernel_basis(const RationalMatrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RationalVector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, n);
}

/// One solution `a` of `a * M = b`, or nullopt when the system is
/// incompatible. Free unknowns are set to zero.
inline std::optional<RationalVector> solve_left(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.cols())
    throw ContractViolation("solve_left: right-hand side has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(m.cols()));
  // a M = b  <=>  M^t a^t = b^t; reduce the augmented system [M^t | b].
  const std::size_t unknowns = m.rows(), equations = m.cols();
  RationalMatrix aug(equations, unknowns + 1);
  for (std::size_t i = 0; i < unknowns; ++i)
    for (std::size_t j = 0; j < equations; ++j)
      if (sgn(m(i, j)) != 0) aug(j, i) = m(i, j);
  for (std::size_t j = 0; j < equations; ++j) aug(j, unknowns) = b[j];
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == unknowns) return std::nullopt;
  RationalVector a(unknowns);
  for (std::size_t i = 0; i < r.rank; ++i) a[r.pivots[i]] = r.reduced(i, unknowns);
  return a;
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  u.check_frame(w);
  return Subspace::span(u.basis().vstack(w.basis()));
}

/// U ∩ W from the left kernel of the stacked bases: x U + y W = 0 gives x U ∈ U ∩ W.
inline Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  u.check_frame(w);
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(u.ambient_dim());
  const RationalMatrix stacked = u.basis().vstack(w.basis());
  const Subspace left = kernel_basis(stacked.transpose());
  std::vector<RationalVector> vecs;
  for (std::size_t k = 0; k < left.dim(); ++k) {
    auto coeffs = left.basis().row(k).first(u.dim());
    vecs.push_back(coeffs * u.basis());
  }
  return Subspace::span(vecs, u.ambient_dim());
}

inline bool contains(const Subspace& u, std::span<const Rational> v) { return u.contains(v); }

}  // namespace apolar

#endif  // APOLAR_EXACTLIN_HPP
