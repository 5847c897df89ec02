#include "bldgzeta/poly.hpp"

#include <numeric>
#include <sstream>

namespace bldgzeta {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponent e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars)
    fail(errc::internal_error, "monomial exponent arity mismatch");
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int idx) {
  Exponent e(nvars, 0);
  e[idx] = 1;
  return monomial(nvars, e, Rat(1));
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > d) d = t;
  }
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) fail(errc::internal_error, "polynomial arity mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) fail(errc::internal_error, "polynomial arity mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) fail(errc::internal_error, "polynomial arity mismatch");
  MultiPoly out(nvars_);
  Exponent e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly out(nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& o, int cap) const {
  MultiPoly out(nvars_);
  Exponent e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    int d1 = std::accumulate(e1.begin(), e1.end(), 0);
    if (d1 > cap) continue;
    for (const auto& [e2, c2] : o.terms_) {
      int d2 = std::accumulate(e2.begin(), e2.end(), 0);
      if (d1 + d2 > cap) continue;
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::truncated(int cap) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= cap) out.terms_.emplace(e, c);
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i < static_cast<int>(vars.size()) ? vars[i]
                                                      : "u" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// Leading term in the map's lexicographic order (largest key).
const std::pair<const MultiPoly::Exponent, Rat>& lead(const MultiPoly& p) {
  return *p.terms().rbegin();
}

bool exp_divides(const MultiPoly::Exponent& a, const MultiPoly::Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

}  // namespace

MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero_poly, "polynomial division by zero");
  int n = a.nvars();
  MultiPoly rem = a;
  MultiPoly quot(n);
  while (!rem.is_zero()) {
    const auto& lr = lead(rem);
    const auto& lb = lead(b);
    if (!exp_divides(lb.first, lr.first))
      fail(errc::division_by_zero_poly, "polynomial division is not exact");
    MultiPoly::Exponent e(n);
    for (int i = 0; i < n; ++i) e[i] = lr.first[i] - lb.first[i];
    Rat c = lr.second / lb.second;
    MultiPoly t = MultiPoly::monomial(n, e, c);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

MultiPoly poly_gcd_univar(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != 1 || b.nvars() != 1)
    fail(errc::internal_error, "univariate gcd on multivariate input");
  auto to_vec = [](const MultiPoly& p) {
    std::vector<Rat> v;
    for (const auto& [e, c] : p.terms()) {
      if (static_cast<size_t>(e[0]) >= v.size()) v.resize(e[0] + 1, Rat(0));
      v[e[0]] = c;
    }
    return v;
  };
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
  };
  std::vector<Rat> r0 = to_vec(a), r1 = to_vec(b);
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 mod r1; the top coefficient cancels exactly each round
    std::vector<Rat> r = r0;
    while (r.size() >= r1.size()) {
      Rat f = r.back() / r1.back();
      size_t off = r.size() - r1.size();
      for (size_t i = 0; i < r1.size(); ++i) r[off + i] -= f * r1[i];
      trim(r);
    }
    r0 = r1;
    r1 = r;
  }
  MultiPoly g(1);
  if (r0.empty()) return g;
  Rat leadc = r0.back();
  for (size_t i = 0; i < r0.size(); ++i)
    g.add_term({static_cast<int>(i)}, r0[i] / leadc);
  return g;
}

bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }
bool ring_pivot_ok(const MultiPoly& x) { return !x.is_zero(); }
MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) {
  return poly_exact_div(a, b);
}

bool ring_is_zero(const DualPoly& x) { return x.a.is_zero() && x.b.is_zero(); }
bool ring_pivot_ok(const DualPoly& x) { return !x.a.is_zero(); }
DualPoly ring_exact_div(const DualPoly& p, const DualPoly& q) {
  MultiPoly w = poly_exact_div(p.a, q.a);
  MultiPoly r = poly_exact_div(p.b - w * q.b, q.a);
  return DualPoly{w, r};
}

RationalFunction::RationalFunction(int nvars)
    : num_(nvars), den_(MultiPoly::constant(nvars, Rat(1))) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::division_by_zero_poly, "zero denominator");
  normalize();
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
  int n = p.nvars();
  return RationalFunction(std::move(p), MultiPoly::constant(n, Rat(1)));
}

RationalFunction RationalFunction::constant(int nvars, const Rat& c) {
  return from_poly(MultiPoly::constant(nvars, c));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  if (num_.nvars() == 1) {
    MultiPoly g = poly_gcd_univar(num_, den_);
    if (g.total_degree() > 0) {
      num_ = poly_exact_div(num_, g);
      den_ = poly_exact_div(den_, g);
    }
  }
  Rat d0 = den_.constant_term();
  Rat scale;
  if (sgn(d0) != 0) {
    scale = 1 / d0;
  } else {
    // content of the denominator, signed by its lexicographic leading term
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [e, c] : den_.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(den_.terms().rbegin()->second) < 0) content = -content;
    scale = 1 / content;
  }
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) fail(errc::division_by_zero_poly, "division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) fail(errc::division_by_zero_poly, "inverse of zero");
  return RationalFunction(den_, num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

MultiPoly RationalFunction::series(int n) const {
  Rat d0 = den_.constant_term();
  if (sgn(d0) == 0) fail(errc::not_expandable, "denominator vanishes at the origin");
  MultiPoly den1 = den_.scaled(1 / d0);
  MultiPoly num1 = num_.scaled(1 / d0);
  int nv = num_.nvars();
  MultiPoly h = MultiPoly::constant(nv, Rat(1)) - den1;  // h(0) = 0
  MultiPoly inv = MultiPoly::constant(nv, Rat(1));
  MultiPoly hp = MultiPoly::constant(nv, Rat(1));
  for (int j = 1; j <= n; ++j) {
    hp = hp.mul_truncated(h, n);
    if (hp.is_zero()) break;
    inv = inv + hp;
  }
  return num1.mul_truncated(inv, n);
}

bool ring_is_zero(const RationalFunction& x) { return x.is_zero(); }
bool ring_pivot_ok(const RationalFunction& x) { return !x.is_zero(); }
RationalFunction ring_exact_div(const RationalFunction& a, const RationalFunction& b) {
  return a / b;
}

MultiPoly det_poly_matrix(const Matrix<MultiPoly>& m) {
  if (m.rows() == 0) return MultiPoly::constant(1, Rat(1));
  int nv = m.at(0, 0).nvars();
  return bareiss_det(m, MultiPoly(nv), MultiPoly::constant(nv, Rat(1)));
}

std::pair<MultiPoly, MultiPoly> det_and_adjugate_trace(const Matrix<MultiPoly>& m,
                                                       const Matrix<MultiPoly>& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    fail(errc::internal_error, "perturbation shape mismatch");
  int nv = m.rows() > 0 ? m.at(0, 0).nvars() : 1;
  MultiPoly z(nv), one = MultiPoly::constant(nv, Rat(1));
  Matrix<DualPoly> d(m.rows(), m.cols(), DualPoly{z, z});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d.at(i, j) = DualPoly{m.at(i, j), n.at(i, j)};
  DualPoly det = bareiss_det(d, DualPoly{z, z}, DualPoly{one, z});
  return {det.a, det.b};
}

bool ratfun_matrix_inverse(const Matrix<RationalFunction>& m,
                           Matrix<RationalFunction>& out) {
  int nv = m.rows() > 0 ? m.at(0, 0).nvars() : 1;
  return field_inverse(m, out, RationalFunction(nv), RationalFunction::constant(nv, Rat(1)));
}

Matrix<MultiPoly> poly_matrix_from_q(const QMat& m, int nvars) {
  Matrix<MultiPoly> out(m.rows(), m.cols(), MultiPoly(nvars));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m.at(i, j)) != 0) out.at(i, j) = MultiPoly::constant(nvars, m.at(i, j));
  return out;
}

Matrix<MultiPoly> poly_matrix_identity(int n, int nvars) {
  return Matrix<MultiPoly>::identity(n, MultiPoly(nvars),
                                     MultiPoly::constant(nvars, Rat(1)));
}

}  // namespace bldgzeta
