#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bldgzeta/linalg.hpp"

namespace bldgzeta {

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// in a map ordered lexicographically on exponent tuples; zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rat>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly monomial(int nvars, Exponent e, const Rat& c);
  static MultiPoly variable(int nvars, int idx);  // u_idx

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Rat coeff(const Exponent& e) const;
  Rat constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& c) const;
  bool operator==(const MultiPoly& o) const;

  /// Product with all terms of total degree > cap dropped.
  MultiPoly mul_truncated(const MultiPoly& o, int cap) const;
  MultiPoly truncated(int cap) const;

  void add_term(const Exponent& e, const Rat& c);

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Exact quotient; throws DivisionByZeroPoly when b is zero or does not
/// divide a in the polynomial ring.
MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b);

/// gcd of univariate polynomials, monic; gcd(0,0) = 0.
MultiPoly poly_gcd_univar(const MultiPoly& a, const MultiPoly& b);

bool ring_is_zero(const MultiPoly& x);
bool ring_pivot_ok(const MultiPoly& x);
MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b);

/// a + eps*b with eps^2 = 0; carries a determinant and its first-order
/// perturbation through one elimination.
struct DualPoly {
  MultiPoly a, b;
  DualPoly operator+(const DualPoly& o) const { return {a + o.a, b + o.b}; }
  DualPoly operator-(const DualPoly& o) const { return {a - o.a, b - o.b}; }
  DualPoly operator*(const DualPoly& o) const {
    return {a * o.a, a * o.b + b * o.a};
  }
  bool operator==(const DualPoly& o) const { return a == o.a && b == o.b; }
};

bool ring_is_zero(const DualPoly& x);
bool ring_pivot_ok(const DualPoly& x);
DualPoly ring_exact_div(const DualPoly& p, const DualPoly& q);

/// num/den with exact coefficients. Normalized so that den(0) = 1 whenever
/// the denominator does not vanish at the origin; univariate instances are
/// additionally reduced by the polynomial gcd. Multivariate reduction is by
/// content only; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars);
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction from_poly(MultiPoly p);
  static RationalFunction constant(int nvars, const Rat& c);

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;

  bool equals(const RationalFunction& o) const;  // cross-multiplication

  /// Formal power series to total degree n; requires den(0) != 0.
  MultiPoly series(int n) const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

bool ring_is_zero(const RationalFunction& x);
bool ring_pivot_ok(const RationalFunction& x);
RationalFunction ring_exact_div(const RationalFunction& a, const RationalFunction& b);

/// Exact determinant by fraction-free elimination over the polynomial ring.
MultiPoly det_poly_matrix(const Matrix<MultiPoly>& m);

/// Returns (det M, tr(adj(M) * N)) in one dual-number elimination, i.e. the
/// constant and first-order coefficients of det(M + eps N).
std::pair<MultiPoly, MultiPoly> det_and_adjugate_trace(const Matrix<MultiPoly>& m,
                                                       const Matrix<MultiPoly>& n);

/// Inverse of a matrix of rational functions (field Gauss-Jordan).
/// Returns false when singular.
bool ratfun_matrix_inverse(const Matrix<RationalFunction>& m,
                           Matrix<RationalFunction>& out);

Matrix<MultiPoly> poly_matrix_from_q(const QMat& m, int nvars);
Matrix<MultiPoly> poly_matrix_identity(int n, int nvars);

}  // namespace bldgzeta
