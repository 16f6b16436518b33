#include "curv4/quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace curv4 {

TwoForm kaehler_form(const SkewEndo& phi) {
  TwoForm w;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      w.c[static_cast<size_t>(pair_index(i, j))] = phi.m(j, i);  // <Phi e_i, e_j>
  return w;
}

double StructureDefects::worst() const {
  return std::max({skew, square, anticommute, product, hodge_mixing});
}

StructureDefects structure_defects(const QuaternionStructure& q) {
  StructureDefects d;
  const Mat4 id = Mat4::identity();
  for (int i = 0; i < 3; ++i) {
    const Mat4& p = q.phi(i).m;
    d.skew = std::max(d.skew, (p + p.transposed()).max_abs());
    d.square = std::max(d.square, (p * p + id).max_abs());
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat4 anti = q.phi(i).m * q.phi(j).m + q.phi(j).m * q.phi(i).m;
      if (i == j) anti += 2.0 * id;
      d.anticommute = std::max(d.anticommute, anti.max_abs());
    }
  d.product = (q.phi3.m - q.phi1.m * q.phi2.m).max_abs();

  // All three Kaehler forms must sit in one Hodge eigenspace: the smaller of
  // the two rejection norms, maximized over i, on whichever side the first
  // form prefers.
  double plus_residual = 0.0, minus_residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    const TwoForm w = kaehler_form(q.phi(i));
    const TwoForm s = hodge_star(w);
    plus_residual = std::max(plus_residual, norm(w - s));
    minus_residual = std::max(minus_residual, norm(w + s));
  }
  d.hodge_mixing = std::min(plus_residual, minus_residual);
  return d;
}

void check_structure(const QuaternionStructure& q, double tol) {
  const StructureDefects d = structure_defects(q);
  if (d.skew > 1e-12) throw NonSkew(d.skew);
  if (d.square > tol) throw NotAComplexStructure(d.square);
  if (d.anticommute > tol)
    throw BadParameters("quaternion structure equations violated by " +
                        std::to_string(d.anticommute));
  if (d.product > tol)
    throw BadParameters("phi3 differs from phi1*phi2 by " +
                        std::to_string(d.product));
  if (d.hodge_mixing > tol)
    throw BadParameters("Kaehler forms mix Hodge eigenspaces by " +
                        std::to_string(d.hodge_mixing));
}

CurvTensor r_phi_unchecked(const SkewEndo& phi) {
  // w_ij = <Phi e_i, e_j> = phi.m(j, i)
  Mat4 w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = phi.m(j, i);

  CurvTensor t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          t.at(i, j, k, l) = w(j, k) * w(i, l) - w(i, k) * w(j, l) -
                             2.0 * w(i, j) * w(k, l);
  return t;
}

CurvTensor r_phi(const SkewEndo& phi, double tol) {
  const Mat4 defect = phi.m * phi.m + Mat4::identity();
  if (defect.max_abs() > tol) throw NotAComplexStructure(defect.max_abs());
  return r_phi_unchecked(phi);
}

QuaternionStructure standard_structure(const OrientedBasis& b, Phi2Convention conv) {
  check_oriented_basis(b);

  // Phi = sum over mapped pairs (src -> dst) of dst (x) src^T - src (x) dst^T.
  auto build = [&](std::initializer_list<std::array<int, 2>> pairs) {
    Mat4 m;
    for (const auto& pr : pairs) {
      const Vec4& src = b.e[static_cast<size_t>(pr[0])];
      const Vec4& dst = b.e[static_cast<size_t>(pr[1])];
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          m(r, c) += dst[r] * src[c] - src[r] * dst[c];
    }
    return SkewEndo::skewed(m);
  };

  QuaternionStructure q;
  q.phi1 = build({{0, 1}, {2, 3}});  // e1->e2, e3->e4
  q.phi2 = conv == Phi2Convention::canonical
               ? build({{0, 2}, {3, 1}})   // e1->e3, e4->e2
               : build({{0, 2}, {1, 3}});  // negative control: e2->e4
  q.phi3 = SkewEndo::skewed(q.phi1.m * q.phi2.m);

  if (conv == Phi2Convention::canonical) check_structure(q);
  return q;
}

CurvTensor synthesize(const QuaternionStructure& q, const std::array<double, 3>& lambda) {
  check_structure(q);
  CurvTensor t;
  for (int i = 0; i < 3; ++i) t += lambda[static_cast<size_t>(i)] * r_phi(q.phi(i));
  return t;
}

namespace {

Mat4 reflection_e4() {
  Mat4 s = Mat4::identity();
  s(3, 3) = -1.0;
  return s;
}

}  // namespace

QuaternionDecomposition recover(const WeylTensor& w, double tol) {
  const DualityReport rep = classify(w.t, tol);
  if (rep.cls == DualityClass::Neither)
    throw NotHalfFlat("|W+| = " + std::to_string(rep.norm_plus) +
                      ", |W-| = " + std::to_string(rep.norm_minus));

  QuaternionDecomposition out;
  out.orientation_flipped = rep.cls == DualityClass::AntiSelfDual;

  // Work on the self-dual side; mirror anti-self-dual input through e4 -> -e4.
  const Mat4 mirror = reflection_e4();
  const CurvTensor working = out.orientation_flipped ? rotate(w.t, mirror) : w.t;

  const AdaptedFrame frame = adapted_basis(WeylTensor{working}, axis(0));
  QuaternionStructure q = standard_structure(frame.basis);
  for (int i = 0; i < 3; ++i)
    out.lambdas[static_cast<size_t>(i)] = frame.eigenvalues[static_cast<size_t>(i)] / 3.0;

  if (out.orientation_flipped) {
    // Conjugate the structure back so the decomposition refers to the input.
    q.phi1 = SkewEndo::skewed(mirror * q.phi1.m * mirror);
    q.phi2 = SkewEndo::skewed(mirror * q.phi2.m * mirror);
    q.phi3 = SkewEndo::skewed(mirror * q.phi3.m * mirror);
    check_structure(q);
  }
  out.structure = q;

  const CurvTensor rebuilt = synthesize(q, out.lambdas);
  out.residual = (w.t - rebuilt).frobenius();
  return out;
}

}  // namespace curv4
