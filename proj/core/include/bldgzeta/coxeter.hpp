#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bldgzeta/affine.hpp"
#include "bldgzeta/poly.hpp"

namespace bldgzeta {

/// Crystallographic Coxeter system with an exact geometric realization.
/// Affine tags act on Q^d by affine reflections; finite tags and custom
/// matrices act linearly on the dual chamber space. Every generator carries
/// the functional of its wall, positive on the fundamental alcove.
struct CoxeterSystem {
  std::string type_tag;                     // "A~1", "A~2", "C~2", "G~2", "A2", ..., "custom"
  std::vector<std::string> labels;          // generator names in order
  std::vector<std::vector<int>> coxeter_m;  // m_st, 0 encodes infinity
  std::vector<AffineMap> gens;
  std::vector<AffineFunctional> walls;
  QVec base_point;  // interior point of the fundamental alcove
  int dim = 0;      // dimension of the realization space

  bool affine = false;  // affine tag with lattice data below
  QMat lambda0;         // columns span the type-zero vertex lattice
  QMat e_basis;         // columns e_1..e_d
  long finite_weyl_order = 0;
  int affine_gen = -1;  // index of the affine reflection

  int rank() const { return static_cast<int>(gens.size()); }
  int order_of(int s, int t) const { return coxeter_m[s][t]; }
};

/// Builds a named system and validates involutions and braid relations on
/// the geometric action. UnsupportedCoxeterLabel for unknown tags.
CoxeterSystem build_system(const std::string& type_tag);

/// Builds from an explicit Coxeter matrix (m_ss = 1, m_st in {2,3,4,6},
/// 0 for infinity). Realized by the integral dual reflection representation.
CoxeterSystem build_system_custom(const std::vector<std::vector<int>>& m);

struct CoxeterElement {
  AffineMap map;
  long length = 0;
  std::vector<int> word;  // generator indices; their product is `map`
};

/// Length and one reduced word by greedy wall-crossing descent toward the
/// fundamental alcove. NotInGroup when the map is not reachable.
CoxeterElement length_and_word(const CoxeterSystem& sys, const AffineMap& w);

struct Ball {
  std::vector<CoxeterElement> elements;  // sorted by (length, word)
  std::vector<long> histogram;           // count per length 0..n
};

/// All elements of length <= n, each once.
Ball enumerate_ball(const CoxeterSystem& sys, int n);

struct ParabolicSubset {
  std::vector<int> gens;  // generator indices, strictly increasing
  static ParabolicSubset of(std::vector<int> gens);
};

/// Full element list of W_I with lengths taken in W. InfiniteParabolic when
/// the closure exceeds `cap` or I = S for an affine system.
std::vector<CoxeterElement> parabolic_enumerate(const CoxeterSystem& sys,
                                                const ParabolicSubset& I,
                                                long cap = 100000);

/// w = w^I * w_I with l(w) = l(w^I) + l(w_I); returns (w^I, w_I).
std::pair<CoxeterElement, CoxeterElement> coset_decompose(const CoxeterSystem& sys,
                                                          const AffineMap& w,
                                                          const ParabolicSubset& I);

/// Matrices for a representation extended multiplicatively along reduced
/// words; valid whenever products are length-additive.
struct HeckeRepresentation {
  int dim = 1;
  std::vector<QMat> gen_mats;  // one per generator
  static HeckeRepresentation trivial(int ngens);
  static HeckeRepresentation scalar_character(int ngens, const Rat& q);
  static HeckeRepresentation from_matrices(std::vector<QMat> mats);
  QMat of_word(const std::vector<int>& word) const;
};

enum class PoincareDomain {
  full,           // all of W up to the length cut
  parabolic,      // W_I
  minimal_coset,  // W^I = minimal coset representatives
};

/// Truncated Poincare series: sum of u^{l(w)} pi(w) over the requested
/// domain, length <= n. Entries are exact polynomials.
Matrix<MultiPoly> poincare_truncated(const CoxeterSystem& sys, PoincareDomain domain,
                                     const ParabolicSubset& I,
                                     const HeckeRepresentation& rep, int n);

/// Closed rational form via parabolic inclusion-exclusion:
/// P = (sum over proper I of (-1)^{|I|+1} P_I^{-1})^{-1}.
Matrix<RationalFunction> poincare_rational(const CoxeterSystem& sys,
                                           const HeckeRepresentation& rep);

/// Length-additivity spot check pi(v) pi(w) = pi(vw) when l(vw) = l(v)+l(w).
bool hecke_length_additive_ok(const CoxeterSystem& sys, const HeckeRepresentation& rep,
                              const std::vector<CoxeterElement>& sample);

}  // namespace bldgzeta
