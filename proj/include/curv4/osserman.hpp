#pragma once

// Jacobi and conformal Jacobi operators, the sampled and exact deciders for
// the (conformally) Osserman property, and the adapted eigenbasis
// construction used by the quaternionic recovery.

#include <array>
#include <vector>

#include "curv4/curvature.hpp"
#include "curv4/linalg.hpp"

namespace curv4 {

// J(x): y -> R(y,x)x, i.e. <J(x)y, z> = R(y,x,x,z). Symmetric, J(x)x = 0,
// quadratic in x.
SymEndo jacobi_op(const CurvTensor& r, const Vec4& x);

// Jacobi operator of the Weyl part; trace-free for every direction.
SymEndo conf_jacobi_op(const CurvTensor& r, const Vec4& x);

struct JacobiSpectrum {
  std::array<double, 4> eigenvalues;  // ascending; always contains ~0
  Vec4 direction;
};

JacobiSpectrum jacobi_spectrum(const CurvTensor& r, const Vec4& unit_x);

// The deterministic direction set used by the sampled decider: the 4
// coordinate axes, 8 diagonal directions, then a Fibonacci-style
// low-discrepancy sequence of n points on S^3.
std::vector<Vec4> sample_directions(int n);

struct OssermanScan {
  bool osserman = false;
  std::array<double, 4> reference_spectrum{};  // at the first direction
  double worst_deviation = 0.0;  // sup-distance between sorted spectra
  Vec4 worst_direction;
};

// True iff the sorted eigenvalue tuple of J (or J_W when use_weyl) deviates
// from the reference by at most tol * (1 + |T|_F) over all sampled
// directions, T being the tensor actually scanned. Throws BadParameters for
// n < 8 or tol <= 0.
OssermanScan osserman_sampled(const CurvTensor& r, bool use_weyl,
                              int n = 200, double tol = 1e-8);

struct PolyTerm {
  std::array<int, 4> exponents{};
  double coefficient = 0.0;
};

struct OssermanCertificate {
  bool osserman = false;
  // sigma_k(J(e1)) for k = 1..4 of the unit-normalized tensor.
  std::array<double, 4> reference_sigma{};
  // When not Osserman: first k whose polynomial identity fails and the
  // worst offending monomial of sigma_k(J(x)) - sigma_k(J(e1)) |x|^2k.
  int failing_power = 0;
  PolyTerm offending;
};

// Exact reformulation: R is Osserman iff for k = 1..4 the characteristic
// polynomial coefficient sigma_k(J(x)), a homogeneous degree-2k polynomial
// in x, equals sigma_k(J(e1)) |x|^2k identically. Coefficients are obtained
// by evaluation on the integer lattice {-k..k}^4 and tensor-product Newton
// interpolation (per-variable degree of sigma_k is at most 2k, so 2k+1 nodes
// per axis determine it). The tensor is rescaled to unit Frobenius norm and
// the lattice to unit radius before coefficients are compared against tol,
// which makes the decision scale-invariant.
OssermanCertificate osserman_exact(const CurvTensor& r, bool use_weyl,
                                   double tol = 1e-8);

struct AdaptedFrame {
  OrientedBasis basis;                 // e1 = chosen direction, det +1
  std::array<double, 3> eigenvalues;  // (a,b,c) ascending; J_W(e1) e_j = .. e_j
  bool flipped_last = false;          // e4 negated to restore orientation
};

// Orthonormal eigenbasis of J_W(x) restricted to x-perp, orientation
// repaired by flipping the last vector when needed. For a Weyl tensor
// a+b+c = 0. Degenerate spectra are fine: any eigenbasis of each cluster.
AdaptedFrame adapted_basis(const WeylTensor& w, const Vec4& unit_x);

}  // namespace curv4
