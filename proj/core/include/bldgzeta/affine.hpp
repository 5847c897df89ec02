#pragma once

#include <compare>

#include "bldgzeta/linalg.hpp"

namespace bldgzeta {

/// Exact affine map x -> a*x + b on Q^d.
struct AffineMap {
  QMat a;
  QVec b;

  static AffineMap identity(int d);
  int dim() const { return static_cast<int>(b.size()); }

  QVec apply(const QVec& x) const;
  /// this after rhs: (f.compose(g))(x) = f(g(x))
  AffineMap compose(const AffineMap& rhs) const;
  bool is_identity() const;

  bool operator==(const AffineMap& o) const;
  bool operator<(const AffineMap& o) const;  // lexicographic, for canonical keys
};

/// Affine functional x -> <a,x> + c. Walls are its zero set; the sign
/// convention is positive on the fundamental alcove.
struct AffineFunctional {
  QVec a;
  Rat c;
  Rat eval(const QVec& x) const;
};

}  // namespace bldgzeta
