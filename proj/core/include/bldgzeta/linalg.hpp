#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bldgzeta/errors.hpp"
#include "bldgzeta/rational.hpp"

namespace bldgzeta {

/// Dense matrix over an arbitrary commutative ring. The zero element is kept
/// as a prototype so coefficient types without a default value (multivariate
/// polynomials carry their variable count) still work.
template <class T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c, const T& zero)
      : r_(r), c_(c), zero_(zero), d_(static_cast<size_t>(r) * c, zero) {}

  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  const T& zero() const { return zero_; }

  T& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  bool operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && d_ == o.d_;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) fail(errc::internal_error, "matrix product shape mismatch");
    Matrix out(r_, o.c_, zero_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& a = at(i, k);
        if (a == zero_) continue;
        for (int j = 0; j < o.c_; ++j) out.at(i, j) = out.at(i, j) + a * o.at(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(errc::internal_error, "matrix sum shape mismatch");
    Matrix out(r_, c_, zero_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] + o.d_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(errc::internal_error, "matrix diff shape mismatch");
    Matrix out(r_, c_, zero_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] - o.d_[i];
    return out;
  }

  Matrix pow(long k, const T& one) const {
    if (r_ != c_) fail(errc::internal_error, "pow of non-square matrix");
    Matrix acc = identity(r_, zero_, one);
    Matrix base = *this;
    long e = k;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  T trace() const {
    T s = zero_;
    for (int i = 0; i < r_; ++i) s = s + at(i, i);
    return s;
  }

 private:
  int r_, c_;
  T zero_;
  std::vector<T> d_;
};

using QMat = Matrix<Rat>;
using ZMat = Matrix<Int>;

QMat qmat_from_rows(const std::vector<QVec>& rows);
QVec qmat_apply(const QMat& m, const QVec& v);
QMat qmat_identity(int n);
QMat qmat_inverse(const QMat& m);  // Gauss-Jordan; throws on singular input
Rat qmat_det(const QMat& m);

ZMat zmat_from_rows(const std::vector<std::vector<long>>& rows);
Int zmat_det(const ZMat& m);
QMat zmat_to_q(const ZMat& m);

/// Smith normal form d = u * a * v with u, v unimodular; d diagonal with
/// nonnegative entries satisfying the divisibility chain.
struct SmithForm {
  ZMat d, u, u_inv, v, v_inv;
};
SmithForm smith_normal_form(const ZMat& a);

// Customization points for fraction-free elimination.
bool ring_is_zero(const Rat& x);
bool ring_pivot_ok(const Rat& x);
Rat ring_exact_div(const Rat& a, const Rat& b);

/// Fraction-free (Bareiss) determinant over a commutative ring with exact
/// division. Splits into connected components of the nonzero pattern first;
/// a symmetric permutation leaves the determinant unchanged.
template <class T>
T bareiss_det_plain(Matrix<T> a, const T& zero, const T& one) {
  int n = a.rows();
  if (n == 0) return one;
  T prev = one;
  bool neg = false;
  for (int k = 0; k < n - 1; ++k) {
    if (!ring_pivot_ok(a.at(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (ring_pivot_ok(a.at(i, k))) { p = i; break; }
      if (p < 0) {
        bool all_zero = true;
        for (int i = k; i < n; ++i)
          if (!ring_is_zero(a.at(i, k))) { all_zero = false; break; }
        if (all_zero) return zero;
        fail(errc::internal_error, "elimination pivot vanished");
      }
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = ring_exact_div(num, prev);
      }
      a.at(i, k) = zero;
    }
    prev = a.at(k, k);
  }
  T det = a.at(n - 1, n - 1);
  if (neg) det = zero - det;
  return det;
}

template <class T>
T bareiss_det(const Matrix<T>& a, const T& zero, const T& one) {
  int n = a.rows();
  if (n != a.cols()) fail(errc::internal_error, "determinant of non-square matrix");
  if (n == 0) return one;
  // union-find on the symmetrized nonzero pattern
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (!ring_is_zero(a.at(i, j)) || !ring_is_zero(a.at(j, i))))
        parent[find(i)] = find(j);
  std::vector<std::vector<int>> comps;
  {
    std::vector<int> comp_of(n, -1);
    for (int i = 0; i < n; ++i) {
      int r = find(i);
      if (comp_of[r] < 0) {
        comp_of[r] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[comp_of[r]].push_back(i);
    }
  }
  if (comps.size() == 1) return bareiss_det_plain(a, zero, one);
  T det = one;
  for (const auto& idx : comps) {
    int m = static_cast<int>(idx.size());
    Matrix<T> sub(m, m, zero);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub.at(i, j) = a.at(idx[i], idx[j]);
    det = det * bareiss_det_plain(sub, zero, one);
  }
  return det;
}

/// Gauss-Jordan inverse over a field (exact division assumed total on
/// nonzero divisors). Returns false if singular.
template <class T>
bool field_inverse(Matrix<T> a, Matrix<T>& out, const T& zero, const T& one) {
  int n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n, zero, one);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!ring_is_zero(a.at(i, k))) { p = i; break; }
    if (p < 0) return false;
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    T piv = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) = ring_exact_div(a.at(k, j), piv);
      inv.at(k, j) = ring_exact_div(inv.at(k, j), piv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || ring_is_zero(a.at(i, k))) continue;
      T f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
      }
    }
  }
  out = inv;
  return true;
}

}  // namespace bldgzeta
