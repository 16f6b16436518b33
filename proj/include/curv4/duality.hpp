#pragma once

// The induced curvature operator on 2-forms, its block decomposition in the
// self-dual / anti-self-dual eigenbasis of the Hodge star, and the four-way
// classification of a curvature tensor.

#include <array>

#include "curv4/curvature.hpp"
#include "curv4/linalg.hpp"

namespace curv4 {

// 6x6 matrix in the canonical TwoForm basis order.
struct Lambda2Operator {
  Mat6 m;
};

// Operator on 2-forms with entries W_pqij over ordered pairs p<q, i<j; the
// usual 1/2-summation convention collapses onto single-count pairs.
Lambda2Operator lambda2(const CurvTensor& w);

struct SdBlocks {
  Mat3 plus;   // f+ block
  Mat3 minus;  // f- block
  Mat3 cross;  // rows f+, columns f-
};

// Conjugate into the orthonormal (f+/sqrt2, f-/sqrt2) basis and slice.
SdBlocks sd_blocks(const Lambda2Operator& op);

enum class DualityClass { ConformallyFlat, SelfDual, AntiSelfDual, Neither };

const char* to_string(DualityClass c);

struct DualityReport {
  DualityClass cls = DualityClass::Neither;
  double norm_plus = 0.0;   // Frobenius norms of the Weyl blocks
  double norm_minus = 0.0;
  double norm_cross = 0.0;
  std::array<double, 3> plus_eigenvalues{};
  std::array<double, 3> minus_eigenvalues{};
};

// Classification of weyl(r). With N = |W+| + |W-|:
//   ConformallyFlat  when N <= tol * (1 + |R|_F)      (checked first)
//   SelfDual         when |W-| <= tol * N < |W+|
//   AntiSelfDual     when |W+| <= tol * N < |W-|
//   Neither          otherwise.
// Throws BadParameters unless 0 < tol < 0.5.
DualityReport classify(const CurvTensor& r, double tol = 1e-8);

}  // namespace curv4
