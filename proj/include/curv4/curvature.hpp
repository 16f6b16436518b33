#pragma once

// Algebraic curvature tensors on R^4: the dense rank-4 value type, symmetry
// validation, Ricci/scalar contractions, the Weyl projection, and the
// generators used as fixtures everywhere else.
//
// Storage is the full 256-entry array rather than 20 canonical components:
// contraction code stays index-literal and validation is free at this size.
// Indices are 0-based in code; the text file format is 1-based.

#include <array>
#include <cstdint>

#include "curv4/errors.hpp"
#include "curv4/linalg.hpp"

namespace curv4 {

struct CurvTensor {
  std::array<double, 256> a{};

  static constexpr int index(int i, int j, int k, int l) {
    return ((i * 4 + j) * 4 + k) * 4 + l;
  }

  double operator()(int i, int j, int k, int l) const {
    return a[static_cast<size_t>(index(i, j, k, l))];
  }
  double& at(int i, int j, int k, int l) {
    return a[static_cast<size_t>(index(i, j, k, l))];
  }

  double frobenius() const {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
  }

  CurvTensor& operator+=(const CurvTensor& o) {
    for (size_t i = 0; i < 256; ++i) a[i] += o.a[i];
    return *this;
  }
  CurvTensor& operator-=(const CurvTensor& o) {
    for (size_t i = 0; i < 256; ++i) a[i] -= o.a[i];
    return *this;
  }
  CurvTensor& operator*=(double s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend CurvTensor operator+(CurvTensor x, const CurvTensor& y) { return x += y; }
  friend CurvTensor operator-(CurvTensor x, const CurvTensor& y) { return x -= y; }
  friend CurvTensor operator*(double s, CurvTensor x) { return x *= s; }
  friend CurvTensor operator*(CurvTensor x, double s) { return x *= s; }
  friend CurvTensor operator-(CurvTensor x) { return x *= -1.0; }
};

// Worst violation of each curvature symmetry.
struct SymmetryDefects {
  double antisymmetry = 0.0;   // R_ijkl + R_jikl  (and last-pair mirror)
  double pair_symmetry = 0.0;  // R_ijkl - R_klij
  double bianchi = 0.0;        // R_ijkl + R_jkil + R_kijl
};

SymmetryDefects symmetry_defects(const CurvTensor& t);

// Returns the input when all three symmetries hold (antisymmetry and pair
// symmetry within pair_tol, first Bianchi within bianchi_tol); otherwise
// throws SymmetryViolation naming the worst offender.
CurvTensor validated(const CurvTensor& raw, double pair_tol = 1e-12,
                     double bianchi_tol = 1e-11);

// The symmetry orbit of one index quadruple: the 8 images of (i,j,k,l) under
// first-pair / last-pair antisymmetry and pair exchange, each with its sign.
struct OrbitEntry {
  int i, j, k, l;
  int sign;
};
std::array<OrbitEntry, 8> symmetry_orbit(int i, int j, int k, int l);

// Writes value into the whole orbit (used by generators and the file reader).
void set_with_symmetries(CurvTensor& t, int i, int j, int k, int l, double value);

// rho(y,z) = sum_i R(e_i, y, z, e_i).
SymEndo ricci(const CurvTensor& r);

// tau = trace(ricci).
double scalar_curv(const CurvTensor& r);

// Constant-curvature building block: R0_ijkl = d_jk d_il - d_ik d_jl.
// ricci(r0) = 3 id, scalar 12.
CurvTensor r0();

// L(x,y)z = g(rho y,z)x - g(rho x,z)y + g(y,z)rho x - g(x,z)rho y, assembled
// by evaluating the operator on basis vectors.
CurvTensor ell(const SymEndo& rho);

// Kulkarni-Nomizu product with the metric, written index-wise:
// (h^g)_ijkl = h_jk d_il - h_ik d_jl + d_jk h_il - d_ik h_jl.
// Agrees with ell(h) for every symmetric h; spans the conformally flat
// tensors, so weyl(kulkarni(h)) == 0.
CurvTensor kulkarni(const SymEndo& h);

// Totally trace-free part of a curvature tensor. Distinct type so the
// operations that require a Weyl tensor say so in their signature.
struct WeylTensor {
  CurvTensor t;
};

// W = R - L(ricci(R))/2 + scalar(R) * r0() / 6   (dimension four).
// This is the unique sign choice, given the Ricci convention above, that
// annihilates c*r0() and makes ricci(W) = 0; it is a linear idempotent.
WeylTensor weyl(const CurvTensor& r);

// Uniform draw from a cube in the 20-dimensional space of algebraic
// curvature tensors: symmetrize a random rank-4 array over the antisymmetry
// and pair-exchange group, then subtract the fully antisymmetric (Bianchi
// violating) part. Deterministic in the seed.
CurvTensor random_curvature(uint64_t seed);

// Pullback by an orthogonal map: R'(x,y,z,w) = R(Ox, Oy, Oz, Ow).
// det(O) = -1 reverses orientation (swaps the self-dual sides).
CurvTensor rotate(const CurvTensor& r, const Mat4& o);

// Weyl-type tensor whose conformal Jacobi operator at e1 is diag(0,a,b,c) in
// the standard basis and which is self-dual for the standard orientation:
//   R_1221 = R_3443 = -R_1234 = a,
//   R_1331 = R_2442 = -R_1342 = b,
//   R_1441 = R_2332 = -R_1423 = c.
// Requires a+b+c = 0 (otherwise the Bianchi identity fails); throws
// BadParameters.
CurvTensor canonical_self_dual(double a, double b, double c, double tol = 1e-9);

}  // namespace curv4
