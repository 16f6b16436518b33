#include "curv4/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace curv4 {

SymmetryDefects symmetry_defects(const CurvTensor& t) {
  SymmetryDefects d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          d.antisymmetry = std::max(
              d.antisymmetry, std::abs(t(i, j, k, l) + t(j, i, k, l)));
          d.antisymmetry = std::max(
              d.antisymmetry, std::abs(t(i, j, k, l) + t(i, j, l, k)));
          d.pair_symmetry = std::max(
              d.pair_symmetry, std::abs(t(i, j, k, l) - t(k, l, i, j)));
          d.bianchi = std::max(
              d.bianchi,
              std::abs(t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l)));
        }
  return d;
}

CurvTensor validated(const CurvTensor& raw, double pair_tol, double bianchi_tol) {
  const SymmetryDefects d = symmetry_defects(raw);
  if (d.antisymmetry > pair_tol)
    throw SymmetryViolation(Symmetry::Antisymmetry, d.antisymmetry);
  if (d.pair_symmetry > pair_tol)
    throw SymmetryViolation(Symmetry::PairSymmetry, d.pair_symmetry);
  if (d.bianchi > bianchi_tol)
    throw SymmetryViolation(Symmetry::Bianchi, d.bianchi);
  return raw;
}

std::array<OrbitEntry, 8> symmetry_orbit(int i, int j, int k, int l) {
  return {{{i, j, k, l, +1},
           {j, i, k, l, -1},
           {i, j, l, k, -1},
           {j, i, l, k, +1},
           {k, l, i, j, +1},
           {l, k, i, j, -1},
           {k, l, j, i, -1},
           {l, k, j, i, +1}}};
}

void set_with_symmetries(CurvTensor& t, int i, int j, int k, int l, double value) {
  for (const auto& o : symmetry_orbit(i, j, k, l))
    t.at(o.i, o.j, o.k, o.l) = o.sign * value;
}

SymEndo ricci(const CurvTensor& r) {
  Mat4 rho;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double s = 0.0;
      for (int i = 0; i < 4; ++i) s += r(i, j, k, i);
      rho(j, k) = s;
    }
  return SymEndo::symmetrized(rho);
}

double scalar_curv(const CurvTensor& r) { return ricci(r).m.trace(); }

CurvTensor r0() {
  CurvTensor t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          t.at(i, j, k, l) = (j == k && i == l ? 1.0 : 0.0) -
                             (i == k && j == l ? 1.0 : 0.0);
  return t;
}

CurvTensor ell(const SymEndo& rho) {
  // Evaluate L(e_i, e_j)e_k and read off the e_l component.
  const Mat4& p = rho.m;
  CurvTensor t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Vec4 out;
        // g(rho e_j, e_k) e_i - g(rho e_i, e_k) e_j
        out += p(k, j) * axis(i);
        out -= p(k, i) * axis(j);
        // + g(e_j, e_k) rho e_i - g(e_i, e_k) rho e_j
        if (j == k)
          for (int r = 0; r < 4; ++r) out[r] += p(r, i);
        if (i == k)
          for (int r = 0; r < 4; ++r) out[r] -= p(r, j);
        for (int l = 0; l < 4; ++l) t.at(i, j, k, l) = out[l];
      }
  return t;
}

CurvTensor kulkarni(const SymEndo& h) {
  const Mat4& m = h.m;
  CurvTensor t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          t.at(i, j, k, l) = m(j, k) * (i == l) - m(i, k) * (j == l) +
                             (j == k) * m(i, l) - (i == k) * m(j, l);
  return t;
}

WeylTensor weyl(const CurvTensor& r) {
  const SymEndo rho = ricci(r);
  const double tau = rho.m.trace();
  CurvTensor w = r - 0.5 * ell(rho) + (tau / 6.0) * r0();
  return WeylTensor{w};
}

CurvTensor random_curvature(uint64_t seed) {
  Rng rng(seed);
  CurvTensor raw;
  for (auto& x : raw.a) x = rng.uniform(-1.0, 1.0);

  // Average over the symmetry group (antisymmetry in both pairs + pair
  // exchange), then drop the fully antisymmetric part so Bianchi holds.
  CurvTensor sym;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          sym.at(i, j, k, l) =
              (raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) +
               raw(j, i, l, k) + raw(k, l, i, j) - raw(l, k, i, j) -
               raw(k, l, j, i) + raw(l, k, j, i)) /
              8.0;

  CurvTensor out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double b = (sym(i, j, k, l) + sym(j, k, i, l) + sym(k, i, j, l)) / 3.0;
          out.at(i, j, k, l) = sym(i, j, k, l) - b;
        }
  return out;
}

CurvTensor rotate(const CurvTensor& r, const Mat4& o) {
  // Contract one slot at a time; 4 passes of 4^5 multiplies.
  CurvTensor t = r;
  for (int slot = 0; slot < 4; ++slot) {
    CurvTensor next;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            double s = 0.0;
            for (int p = 0; p < 4; ++p) {
              switch (slot) {
                case 0: s += o(p, i) * t(p, j, k, l); break;
                case 1: s += o(p, j) * t(i, p, k, l); break;
                case 2: s += o(p, k) * t(i, j, p, l); break;
                default: s += o(p, l) * t(i, j, k, p); break;
              }
            }
            next.at(i, j, k, l) = s;
          }
    t = next;
  }
  return t;
}

CurvTensor canonical_self_dual(double a, double b, double c, double tol) {
  if (std::abs(a + b + c) > tol)
    throw BadParameters("canonical_self_dual requires a+b+c = 0, got " +
                        std::to_string(a + b + c));
  CurvTensor t;
  // 0-based indices; see header for the 1-based component pattern.
  set_with_symmetries(t, 0, 1, 1, 0, a);
  set_with_symmetries(t, 2, 3, 3, 2, a);
  set_with_symmetries(t, 0, 1, 2, 3, -a);
  set_with_symmetries(t, 0, 2, 2, 0, b);
  set_with_symmetries(t, 1, 3, 3, 1, b);
  set_with_symmetries(t, 0, 2, 3, 1, -b);
  set_with_symmetries(t, 0, 3, 3, 0, c);
  set_with_symmetries(t, 1, 2, 2, 1, c);
  set_with_symmetries(t, 0, 3, 1, 2, -c);
  return t;
}

}  // namespace curv4
