#pragma once

// Exact linear algebra over Q(i): sparse vectors and matrices, an incremental
// reduced row-echelon builder, and canonical subspaces.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"

namespace lieq {

using Vec = std::vector<GaussRat>;
using SparseEntry = std::pair<std::size_t, GaussRat>;
/// Sorted by index, no zero values.
using SparseVec = std::vector<SparseEntry>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = GaussRat(1);
  return v;
}

inline bool is_zero(std::span<const GaussRat> v) {
  return std::all_of(v.begin(), v.end(), [](const GaussRat& x) { return x.is_zero(); });
}

inline SparseVec to_sparse(std::span<const GaussRat> v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  }
  return out;
}

inline Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [k, x] : v) out.at(k) = x;
  return out;
}

/// out += c * v
inline void axpy(Vec& out, const GaussRat& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) out[k] += c * x;
}

inline void axpy(Vec& out, const GaussRat& c, std::span<const GaussRat> v) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[k] += c * v[k];
  }
}

inline Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector subtract");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vec operator*(const GaussRat& c, Vec a) {
  for (auto& x : a) x *= c;
  return a;
}

/// Row-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.data_[k].emplace_back(k, GaussRat(1));
    return m;
  }

  static SparseMatrix scalar(std::size_t n, const GaussRat& c) {
    SparseMatrix m(n, n);
    if (c.is_zero()) return m;
    for (std::size_t k = 0; k < n; ++k) m.data_[k].emplace_back(k, c);
    return m;
  }

  static SparseMatrix from_dense(const std::vector<Vec>& rows, std::size_t cols) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
      m.data_[r] = to_sparse(rows[r]);
    }
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }
  const SparseVec& row(std::size_t r) const { return data_.at(r); }

  GaussRat at(std::size_t r, std::size_t c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return {};
  }

  void add_to(std::size_t r, std::size_t c, const GaussRat& v) {
    if (c >= cols_) throw DimensionMismatch("column index out of range");
    if (v.is_zero()) return;
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    } else {
      row.emplace(it, c, v);
    }
  }

  void set(std::size_t r, std::size_t c, const GaussRat& v) {
    add_to(r, c, v - at(r, c));
  }

  void set_row(std::size_t r, SparseVec row) { data_.at(r) = std::move(row); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
  }

  std::vector<Vec> to_dense() const {
    std::vector<Vec> out;
    out.reserve(rows());
    for (const auto& row : data_) out.push_back(lieq::to_dense(row, cols_));
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    }
    return t;
  }

  SparseMatrix conjugate_transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v.conj());
    }
    return t;
  }

  Vec apply(std::span<const GaussRat> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector product");
    Vec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      GaussRat acc;
      for (const auto& [c, v] : data_[r]) {
        if (!x[c].is_zero()) acc += v * x[c];
      }
      out[r] = std::move(acc);
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw DimensionMismatch("matrix product");
    SparseMatrix out(a.rows(), b.cols_);
    Vec acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      idx.clear();
      for (const auto& [k, av] : a.data_[r]) {
        for (const auto& [c, bv] : b.data_[k]) {
          if (!touched[c]) {
            touched[c] = 1;
            idx.push_back(c);
          }
          acc[c] += av * bv;
        }
      }
      std::sort(idx.begin(), idx.end());
      SparseVec row;
      for (std::size_t c : idx) {
        if (!acc[c].is_zero()) row.emplace_back(c, std::move(acc[c]));
        acc[c] = GaussRat();
        touched[c] = 0;
      }
      out.data_[r] = std::move(row);
    }
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, GaussRat(1));
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, GaussRat(-1));
  }
  friend SparseMatrix operator*(const GaussRat& c, const SparseMatrix& a) {
    SparseMatrix out(a.rows(), a.cols_);
    if (c.is_zero()) return out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (const auto& [k, v] : a.data_[r]) out.data_[r].emplace_back(k, c * v);
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const GaussRat& sb) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    SparseMatrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (const auto& [c, v] : b.data_[r]) out.add_to(r, c, sb * v);
    }
    return out;
  }

  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

/// Incrementally maintained reduced row-echelon form. Every stored row has a
/// unit pivot and zeros in every other row's pivot column.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residual of v after subtracting its projection onto the pivot rows.
  Vec reduce(std::span<const GaussRat> v) const {
    if (v.size() != cols_) throw DimensionMismatch("echelon reduce");
    Vec acc(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const GaussRat c = acc[pivots_[r]];
      if (!c.is_zero()) axpy(acc, -c, rows_[r]);
    }
    return acc;
  }

  /// Inserts v; returns true iff it increased the rank.
  bool add(std::span<const GaussRat> v) {
    Vec acc = reduce(v);
    std::size_t p = 0;
    while (p < cols_ && acc[p].is_zero()) ++p;
    if (p == cols_) return false;
    const GaussRat inv = acc[p].inverse();
    for (auto& x : acc) x *= inv;
    SparseVec row = to_sparse(acc);
    // Clear the new pivot column from existing rows.
    for (auto& other : rows_) {
      auto it = std::lower_bound(other.begin(), other.end(), p,
                                 [](const SparseEntry& e, std::size_t k) { return e.first < k; });
      if (it == other.end() || it->first != p) continue;
      const GaussRat c = it->second;
      Vec dense = to_dense(other, cols_);
      axpy(dense, -c, row);
      other = to_sparse(dense);
    }
    pivot_row_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(row));
    return true;
  }

  bool add(const SparseVec& v) { return add(to_dense(v, cols_)); }

  /// Rows sorted by pivot column.
  std::vector<std::pair<std::size_t, SparseVec>> sorted_rows() const {
    std::vector<std::pair<std::size_t, SparseVec>> out;
    out.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.emplace_back(pivots_[r], rows_[r]);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  bool is_pivot(std::size_t c) const { return pivot_row_.at(c) != npos; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

/// A linear subspace of GaussRat^n in canonical reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
      s.rows_.push_back({{k, GaussRat(1)}});
      s.pivots_.push_back(k);
    }
    return s;
  }

  static Subspace from_echelon(const RowEchelon& e) {
    Subspace s(e.cols());
    for (auto& [p, row] : e.sorted_rows()) {
      s.pivots_.push_back(p);
      s.rows_.push_back(std::move(row));
    }
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    RowEchelon e(ambient);
    for (const auto& v : vectors) e.add(v);
    return from_echelon(e);
  }

  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
    RowEchelon e(ambient);
    for (const auto& v : vectors) e.add(v);
    return from_echelon(e);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<SparseVec>& sparse_basis() const { return rows_; }

  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(to_dense(r, ambient_));
    return out;
  }

  /// Coordinates complementary to the pivots, lowest index first.
  std::vector<std::size_t> nonpivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (p < pivots_.size() && pivots_[p] == k) {
        ++p;
      } else {
        out.push_back(k);
      }
    }
    return out;
  }

  /// v minus its component along the subspace, with zeros at pivot coordinates.
  Vec reduce(std::span<const GaussRat> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace reduce");
    Vec acc(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const GaussRat c = acc[pivots_[r]];
      if (!c.is_zero()) axpy(acc, -c, rows_[r]);
    }
    return acc;
  }

  bool contains(std::span<const GaussRat> v) const { return lieq::is_zero(reduce(v)); }

  /// Coefficients of v in the echelon basis; v must lie in the subspace.
  Vec coordinates(std::span<const GaussRat> v) const {
    if (!contains(v)) throw DimensionMismatch("vector not in subspace");
    Vec c;
    c.reserve(rows_.size());
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
  }

  bool is_subspace_of(const Subspace& other) const {
    if (ambient_ != other.ambient_) return false;
    return std::all_of(rows_.begin(), rows_.end(), [&](const SparseVec& r) {
      return other.contains(to_dense(r, ambient_));
    });
  }

  Subspace sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("subspace sum");
    std::vector<SparseVec> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(ambient_, all);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const SparseMatrix& m) {
  // Row rank equals column rank; eliminate the shorter dimension.
  if (m.rows() > m.cols()) return rank(m.transpose());
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  return e.rank();
}

/// Kernel {x : m x = 0}.
inline Subspace nullspace(const SparseMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  std::vector<std::size_t> pivot_of_col(m.cols(), static_cast<std::size_t>(-1));
  auto rows = e.sorted_rows();
  std::vector<SparseVec> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (e.is_pivot(f)) continue;
    Vec x(m.cols());
    x[f] = GaussRat(1);
    for (const auto& [p, row] : rows) {
      for (const auto& [c, v] : row) {
        if (c == f) x[p] = -v;
      }
    }
    kernel.push_back(to_sparse(x));
  }
  return Subspace::span(m.cols(), kernel);
}

/// Image {m x}.
inline Subspace column_space(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  std::vector<SparseVec> cols;
  cols.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) cols.push_back(t.row(r));
  return Subspace::span(m.rows(), cols);
}

/// Exact inverse by Gauss-Jordan; returns nullopt when singular.
inline std::optional<SparseMatrix> try_inverse(const SparseMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> a = m.to_dense();
  std::vector<Vec> inv = SparseMatrix::identity(n).to_dense();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const GaussRat s = a[c][c].inverse();
    for (auto& x : a[c]) x *= s;
    for (auto& x : inv[c]) x *= s;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const GaussRat f = -a[r][c];
      axpy(a[r], f, a[c]);
      axpy(inv[r], f, inv[c]);
    }
  }
  return SparseMatrix::from_dense(inv, n);
}

}  // namespace lieq
