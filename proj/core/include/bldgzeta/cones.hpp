#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bldgzeta/linalg.hpp"

namespace bldgzeta {

/// Full-rank lattice in Q^r, columns of `basis` are the generators.
struct RationalLattice {
  QMat basis;
  int dim() const { return basis.rows(); }
  static RationalLattice standard(int r);
  static RationalLattice make(QMat basis);  // checks nonzero determinant
};

/// Sharp rational open cone: rows of `alphas` are r independent functionals,
/// the cone is where all of them are positive.
struct SharpCone {
  QMat alphas;
  int sides() const { return alphas.rows(); }
  static SharpCone make(QMat alphas);  // DegenerateCone if rows are dependent
};

struct ConeDecomposition {
  RationalLattice lattice;
  SharpCone cone;
  std::vector<QVec> axes;      // a_1..a_r, lattice vectors on the cone edges
  std::vector<QVec> residues;  // E, one representative per coset of <a_j>
  Int sublattice_index;        // |Sigma / Sigma'|
};

/// For each j, the lattice vector with alpha_i = 0 (i != j) and minimal
/// positive alpha_j.
std::vector<QVec> axis_generators(const RationalLattice& lat, const SharpCone& cone);

/// Residue set: the unique coset representative with every normalized
/// coordinate alpha_j(v)/alpha_j(a_j) in (0, 1].
ConeDecomposition residue_set(const RationalLattice& lat, const SharpCone& cone,
                              const std::vector<QVec>& axes);

ConeDecomposition decompose_cone(const RationalLattice& lat, const SharpCone& cone);

struct PointDecomposition {
  QVec residue;
  std::vector<Int> nu;
};

/// v = residue + sum nu_j a_j, unique; NotInCone / NotInLattice on bad input.
PointDecomposition decompose_point(const ConeDecomposition& dec, const QVec& v);

struct BijectionReport {
  long long cone_points = 0;
  long long failures = 0;
  bool ok = true;
  std::optional<std::vector<long>> first_failure;  // lattice coordinates
  std::string detail;
};

/// Brute-force oracle: sweeps every lattice point with coordinates in
/// [-radius, radius]^r and checks that open-cone membership coincides with a
/// successful, round-tripping decomposition.
BijectionReport verify_bijection(const ConeDecomposition& dec, long radius,
                                 int threads = 0);

}  // namespace bldgzeta
