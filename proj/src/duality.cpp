#include "curv4/duality.hpp"

#include <cmath>

namespace curv4 {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

double block_frobenius(const Mat3& m) { return m.frobenius(); }

}  // namespace

Lambda2Operator lambda2(const CurvTensor& w) {
  Lambda2Operator op;
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 6; ++col) {
      const int i = kPairs[row][0], j = kPairs[row][1];
      const int p = kPairs[col][0], q = kPairs[col][1];
      op.m(row, col) = w(p, q, i, j);
    }
  return op;
}

SdBlocks sd_blocks(const Lambda2Operator& op) {
  // Columns of the change of basis: f1..f3 plus then minus, each / sqrt 2.
  const SdBasis f = sd_basis();
  Mat6 pmat;
  const double inv_sqrt2 = 0.7071067811865475244008443621048;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 6; ++r) {
      pmat(r, c) = inv_sqrt2 * f.plus[static_cast<size_t>(c)].c[static_cast<size_t>(r)];
      pmat(r, c + 3) = inv_sqrt2 * f.minus[static_cast<size_t>(c)].c[static_cast<size_t>(r)];
    }
  const Mat6 conj = pmat.transposed() * op.m * pmat;

  SdBlocks b;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      b.plus(r, c) = conj(r, c);
      b.minus(r, c) = conj(r + 3, c + 3);
      b.cross(r, c) = conj(r, c + 3);
    }
  return b;
}

const char* to_string(DualityClass c) {
  switch (c) {
    case DualityClass::ConformallyFlat: return "ConformallyFlat";
    case DualityClass::SelfDual: return "SelfDual";
    case DualityClass::AntiSelfDual: return "AntiSelfDual";
    case DualityClass::Neither: return "Neither";
  }
  return "?";
}

DualityReport classify(const CurvTensor& r, double tol) {
  if (!(tol > 0.0) || tol >= 0.5)
    throw BadParameters("classify needs tol in (0, 0.5)");

  const WeylTensor w = weyl(r);
  const SdBlocks b = sd_blocks(lambda2(w.t));

  DualityReport rep;
  rep.norm_plus = block_frobenius(b.plus);
  rep.norm_minus = block_frobenius(b.minus);
  rep.norm_cross = block_frobenius(b.cross);
  rep.plus_eigenvalues = sym_eigen<3>(b.plus).values;
  rep.minus_eigenvalues = sym_eigen<3>(b.minus).values;

  const double total = rep.norm_plus + rep.norm_minus;
  if (total <= tol * (1.0 + r.frobenius()))
    rep.cls = DualityClass::ConformallyFlat;
  else if (rep.norm_minus <= tol * total && tol * total < rep.norm_plus)
    rep.cls = DualityClass::SelfDual;
  else if (rep.norm_plus <= tol * total && tol * total < rep.norm_minus)
    rep.cls = DualityClass::AntiSelfDual;
  else
    rep.cls = DualityClass::Neither;
  return rep;
}

}  // namespace curv4
