#include "bldgzeta/cones.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace bldgzeta {

RationalLattice RationalLattice::standard(int r) {
  return RationalLattice{qmat_identity(r)};
}

RationalLattice RationalLattice::make(QMat basis) {
  if (basis.rows() != basis.cols() || sgn(qmat_det(basis)) == 0)
    fail(errc::malformed_document, "lattice basis is singular");
  return RationalLattice{std::move(basis)};
}

SharpCone SharpCone::make(QMat alphas) {
  if (alphas.rows() != alphas.cols() || sgn(qmat_det(alphas)) == 0)
    fail(errc::degenerate_cone, "cone functionals are linearly dependent");
  return SharpCone{std::move(alphas)};
}

namespace {

// alpha values of an ambient vector, one entry per functional
QVec alpha_values(const SharpCone& cone, const QVec& v) {
  return qmat_apply(cone.alphas, v);
}

// clears denominators and divides by the integer content; keeps direction
std::vector<Int> primitive_integer(const QVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    w[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) fail(errc::internal_error, "primitive vector of zero");
  for (Int& x : w) x /= g;
  return w;
}

QVec lattice_vector(const RationalLattice& lat, const std::vector<Int>& coords) {
  QVec c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = Rat(coords[i]);
  return qmat_apply(lat.basis, c);
}

}  // namespace

std::vector<QVec> axis_generators(const RationalLattice& lat, const SharpCone& cone) {
  int r = lat.dim();
  if (cone.sides() != r) fail(errc::degenerate_cone, "cone/lattice dimension mismatch");
  // functionals in lattice coordinates
  QMat m = cone.alphas * lat.basis;
  if (sgn(qmat_det(m)) == 0)
    fail(errc::degenerate_cone, "cone functionals are linearly dependent");
  QMat minv = qmat_inverse(m);
  std::vector<QVec> axes;
  for (int j = 0; j < r; ++j) {
    // kernel of the other functionals is spanned by column j of m^{-1}
    QVec dir(r);
    for (int i = 0; i < r; ++i) dir[i] = minv.at(i, j);
    std::vector<Int> g = primitive_integer(dir);
    // sign so that alpha_j is positive
    Rat aj(0);
    for (int i = 0; i < r; ++i) aj += m.at(j, i) * Rat(g[i]);
    if (sgn(aj) == 0) fail(errc::internal_error, "axis direction degenerate");
    if (sgn(aj) < 0)
      for (Int& x : g) x = -x;
    axes.push_back(lattice_vector(lat, g));
  }
  return axes;
}

ConeDecomposition residue_set(const RationalLattice& lat, const SharpCone& cone,
                              const std::vector<QVec>& axes) {
  int r = lat.dim();
  QMat basis_inv = qmat_inverse(lat.basis);
  // axis generators in lattice coordinates, as columns of an integer matrix
  ZMat g(r, r, Int(0));
  for (int j = 0; j < r; ++j) {
    QVec c = qmat_apply(basis_inv, axes[j]);
    for (int i = 0; i < r; ++i) {
      if (!is_integer(c[i])) fail(errc::internal_error, "axis is not a lattice vector");
      g.at(i, j) = c[i].get_num();
    }
  }
  SmithForm snf = smith_normal_form(g);
  Int index = 1;
  for (int i = 0; i < r; ++i) index *= snf.d.at(i, i);
  if (index == 0) fail(errc::degenerate_cone, "axis generators do not span");

  // alpha_j evaluated on the axes, for normalization
  QVec axis_alpha(r);
  for (int j = 0; j < r; ++j) {
    axis_alpha[j] = alpha_values(cone, axes[j])[j];
    if (sgn(axis_alpha[j]) <= 0) fail(errc::internal_error, "axis has nonpositive alpha");
  }

  // coset representatives in Smith coordinates: u_inv * y, y in prod [0, d_i)
  std::vector<QVec> residues;
  std::vector<Int> y(r, 0);
  bool done = false;
  while (!done) {
    // rep in lattice coordinates
    std::vector<Int> rep(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) rep[i] += snf.u_inv.at(i, j) * y[j];
    QVec v = lattice_vector(lat, rep);
    // shift into the normalized box: beta_j + m_j in (0, 1]
    QVec beta = alpha_values(cone, v);
    for (int j = 0; j < r; ++j) {
      Rat bj = beta[j] / axis_alpha[j];
      Int mj = rat_floor(Rat(1) - bj);
      if (mj != 0)
        for (int i = 0; i < r; ++i) v[i] += Rat(mj) * axes[j][i];
    }
    residues.push_back(v);
    // next y
    done = true;
    for (int i = 0; i < r; ++i) {
      y[i] += 1;
      if (y[i] < snf.d.at(i, i)) { done = false; break; }
      y[i] = 0;
    }
  }
  std::sort(residues.begin(), residues.end());
  if (static_cast<Int>(residues.size()) != index)
    fail(errc::internal_error, "residue count disagrees with the lattice index");
  return ConeDecomposition{lat, cone, axes, residues, index};
}

ConeDecomposition decompose_cone(const RationalLattice& lat, const SharpCone& cone) {
  return residue_set(lat, cone, axis_generators(lat, cone));
}

PointDecomposition decompose_point(const ConeDecomposition& dec, const QVec& v) {
  int r = dec.lattice.dim();
  QVec c = qmat_apply(qmat_inverse(dec.lattice.basis), v);
  for (const Rat& x : c)
    if (!is_integer(x)) fail(errc::not_in_lattice, "point is not a lattice vector");
  QVec beta = qmat_apply(dec.cone.alphas, v);
  for (int j = 0; j < r; ++j)
    if (sgn(beta[j]) <= 0) fail(errc::not_in_cone, "point is outside the open cone");
  PointDecomposition out;
  out.nu.resize(r);
  QVec e = v;
  for (int j = 0; j < r; ++j) {
    Rat aj = qmat_apply(dec.cone.alphas, dec.axes[j])[j];
    Rat bj = beta[j] / aj;
    out.nu[j] = rat_ceil(bj) - 1;
    if (out.nu[j] < 0) fail(errc::internal_error, "negative cone coordinate");
    for (int i = 0; i < r; ++i) e[i] -= Rat(out.nu[j]) * dec.axes[j][i];
  }
  out.residue = e;
  if (!std::binary_search(dec.residues.begin(), dec.residues.end(), e))
    fail(errc::internal_error, "decomposition landed outside the residue set");
  return out;
}

namespace {

struct BoxScan {
  long long cone_points = 0;
  long long failures = 0;
  std::optional<std::vector<long>> first_failure;
  std::string detail;
};

// odometer over [-radius, radius]^r, starting from a given linear index
void scan_range(const ConeDecomposition& dec, long radius, long long lo, long long hi,
                BoxScan& out) {
  int r = dec.lattice.dim();
  long side = 2 * radius + 1;
  std::vector<long> c(r);
  for (long long idx = lo; idx < hi; ++idx) {
    long long t = idx;
    for (int i = 0; i < r; ++i) {
      c[i] = static_cast<long>(t % side) - radius;
      t /= side;
    }
    QVec coords(r);
    for (int i = 0; i < r; ++i) coords[i] = Rat(c[i]);
    QVec v = qmat_apply(dec.lattice.basis, coords);
    QVec alpha = qmat_apply(dec.cone.alphas, v);
    bool in_cone = true;
    for (const Rat& x : alpha)
      if (sgn(x) <= 0) { in_cone = false; break; }
    bool bad = false;
    std::string why;
    if (in_cone) {
      ++out.cone_points;
      try {
        PointDecomposition pd = decompose_point(dec, v);
        QVec back = pd.residue;
        for (int j = 0; j < r; ++j)
          for (int i = 0; i < r; ++i) back[i] += Rat(pd.nu[j]) * dec.axes[j][i];
        if (back != v) { bad = true; why = "round trip mismatch"; }
        for (const Int& n : pd.nu)
          if (n < 0) { bad = true; why = "negative multiplier"; }
      } catch (const error& e) {
        bad = true;
        why = std::string("cone point failed to decompose: ") + e.code_name();
      }
    } else {
      // outside the open cone: decomposition must refuse
      try {
        decompose_point(dec, v);
        bad = true;
        why = "point outside the cone decomposed";
      } catch (const error&) {
      }
    }
    if (bad) {
      ++out.failures;
      if (!out.first_failure) {
        out.first_failure = c;
        out.detail = why;
      }
    }
  }
}

}  // namespace

BijectionReport verify_bijection(const ConeDecomposition& dec, long radius, int threads) {
  if (radius < 1) fail(errc::usage_error, "box radius must be at least 1");
  int r = dec.lattice.dim();
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= (2 * radius + 1);
  int nt = effective_threads(threads);
  if (nt > 1 && total > 4096) {
    std::vector<BoxScan> parts(nt);
    std::vector<std::thread> pool;
    long long chunk = (total + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
      long long lo = t * chunk, hi = std::min<long long>(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&dec, radius, lo, hi, &parts, t] {
        scan_range(dec, radius, lo, hi, parts[t]);
      });
    }
    for (auto& th : pool) th.join();
    BijectionReport rep;
    for (const BoxScan& p : parts) {
      rep.cone_points += p.cone_points;
      rep.failures += p.failures;
      if (!rep.first_failure && p.first_failure) {
        rep.first_failure = p.first_failure;
        rep.detail = p.detail;
      }
    }
    rep.ok = rep.failures == 0;
    return rep;
  }
  BoxScan scan;
  scan_range(dec, radius, 0, total, scan);
  BijectionReport rep{scan.cone_points, scan.failures, scan.failures == 0,
                      scan.first_failure, scan.detail};
  return rep;
}

}  // namespace bldgzeta
