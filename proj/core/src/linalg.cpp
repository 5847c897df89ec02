#include "bldgzeta/linalg.hpp"

namespace bldgzeta {

bool ring_is_zero(const Rat& x) { return sgn(x) == 0; }
bool ring_pivot_ok(const Rat& x) { return sgn(x) != 0; }
Rat ring_exact_div(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) fail(errc::internal_error, "rational division by zero");
  return a / b;
}

QMat qmat_from_rows(const std::vector<QVec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  QMat m(r, c, Rat(0));
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(errc::malformed_document, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols())
    fail(errc::internal_error, "matrix-vector shape mismatch");
  QVec out(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

QMat qmat_identity(int n) { return QMat::identity(n, Rat(0), Rat(1)); }

QMat qmat_inverse(const QMat& m) {
  QMat out;
  if (!field_inverse(m, out, Rat(0), Rat(1)))
    fail(errc::internal_error, "singular matrix inverse");
  return out;
}

Rat qmat_det(const QMat& m) { return bareiss_det(m, Rat(0), Rat(1)); }

ZMat zmat_from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  ZMat m(r, c, Int(0));
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(errc::malformed_document, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(rows[i][j]);
  }
  return m;
}

QMat zmat_to_q(const ZMat& m) {
  QMat out(m.rows(), m.cols(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

Int zmat_det(const ZMat& m) {
  Rat d = qmat_det(zmat_to_q(m));
  if (!is_integer(d)) fail(errc::internal_error, "integer determinant not integral");
  return d.get_num();
}

namespace {

struct SmithWork {
  ZMat a, u, u_inv, v, v_inv;

  void row_swap(int i, int j) {
    for (int k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    for (int k = 0; k < u_inv.rows(); ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
  }
  void col_swap(int i, int j) {
    for (int k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
    for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    for (int k = 0; k < v_inv.cols(); ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
  }
  // row i -= q * row t
  void row_sub(int i, int t, const Int& q) {
    for (int k = 0; k < a.cols(); ++k) a.at(i, k) -= q * a.at(t, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) -= q * u.at(t, k);
    for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, t) += q * u_inv.at(k, i);
  }
  // col j -= q * col t
  void col_sub(int j, int t, const Int& q) {
    for (int k = 0; k < a.rows(); ++k) a.at(k, j) -= q * a.at(k, t);
    for (int k = 0; k < v.rows(); ++k) v.at(k, j) -= q * v.at(k, t);
    for (int k = 0; k < v_inv.cols(); ++k) v_inv.at(t, k) += q * v_inv.at(j, k);
  }
  void row_negate(int i) {
    for (int k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, i) = -u_inv.at(k, i);
  }
};

}  // namespace

SmithForm smith_normal_form(const ZMat& a0) {
  int m = a0.rows(), n = a0.cols();
  SmithWork w{a0, ZMat::identity(m, Int(0), Int(1)), ZMat::identity(m, Int(0), Int(1)),
              ZMat::identity(n, Int(0), Int(1)), ZMat::identity(n, Int(0), Int(1))};
  int t = 0;
  int steps = std::min(m, n);
  while (t < steps) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (w.a.at(i, j) == 0) continue;
        Int v = abs(w.a.at(i, j));
        if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (pi < 0) break;  // trailing block is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      if (w.a.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
      w.row_sub(i, t, q);
      if (w.a.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      if (w.a.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
      w.col_sub(j, t, q);
      if (w.a.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller pivot now exists, redo this step

    // divisibility of the remaining block by the pivot
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (w.a.at(i, j) % w.a.at(t, t) != 0) {
          w.row_sub(t, i, Int(-1));  // add row i to row t, then redo
          fixed = true;
        }
    if (fixed) continue;

    if (w.a.at(t, t) < 0) w.row_negate(t);
    ++t;
  }
  return SmithForm{w.a, w.u, w.u_inv, w.v, w.v_inv};
}

}  // namespace bldgzeta
