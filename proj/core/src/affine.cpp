#include "bldgzeta/affine.hpp"

namespace bldgzeta {

AffineMap AffineMap::identity(int d) {
  return AffineMap{qmat_identity(d), QVec(d, Rat(0))};
}

QVec AffineMap::apply(const QVec& x) const {
  QVec y = qmat_apply(a, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += b[i];
  return y;
}

AffineMap AffineMap::compose(const AffineMap& rhs) const {
  AffineMap out{a * rhs.a, qmat_apply(a, rhs.b)};
  for (size_t i = 0; i < out.b.size(); ++i) out.b[i] += b[i];
  return out;
}

bool AffineMap::is_identity() const {
  for (const Rat& x : b)
    if (sgn(x) != 0) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

bool AffineMap::operator==(const AffineMap& o) const { return a == o.a && b == o.b; }

bool AffineMap::operator<(const AffineMap& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int c = cmp(a.at(i, j), o.a.at(i, j));
      if (c != 0) return c < 0;
    }
  for (size_t i = 0; i < b.size(); ++i) {
    int c = cmp(b[i], o.b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Rat AffineFunctional::eval(const QVec& x) const {
  Rat s = c;
  for (size_t i = 0; i < x.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace bldgzeta
