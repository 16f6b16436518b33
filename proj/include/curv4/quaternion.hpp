#pragma once

// Quaternionic curvature generators R_Phi, unitary quaternion structures,
// synthesis W = sum lambda_i R_Phi_i, and the constructive recovery of a
// quaternionic representation from a half-flat Weyl tensor.

#include <array>

#include "curv4/curvature.hpp"
#include "curv4/duality.hpp"
#include "curv4/linalg.hpp"
#include "curv4/osserman.hpp"

namespace curv4 {

// Anticommuting triple of skew complex structures: Phi_i^2 = -id,
// Phi_i Phi_j + Phi_j Phi_i = -2 delta_ij id, Phi_3 = Phi_1 Phi_2, and all
// three Kaehler forms on the same side of the Hodge star.
struct QuaternionStructure {
  SkewEndo phi1, phi2, phi3;

  const SkewEndo& phi(int i) const { return i == 0 ? phi1 : (i == 1 ? phi2 : phi3); }
};

// Kaehler 2-form of a skew endomorphism: w(x,y) = <Phi x, y>.
TwoForm kaehler_form(const SkewEndo& phi);

struct StructureDefects {
  double skew = 0.0;          // |Phi + Phi^T|
  double square = 0.0;        // |Phi^2 + id|
  double anticommute = 0.0;   // |Phi_i Phi_j + Phi_j Phi_i + 2 delta_ij id|
  double product = 0.0;       // |Phi_3 - Phi_1 Phi_2|
  double hodge_mixing = 0.0;  // Kaehler forms not all on one Hodge side

  double worst() const;
};

StructureDefects structure_defects(const QuaternionStructure& q);

// Throws the first violated invariant (NonSkew / NotAComplexStructure /
// BadParameters for the algebra relations).
void check_structure(const QuaternionStructure& q, double tol = 1e-10);

// R_Phi(x,y)z = (Phi y,z)Phi x - (Phi x,z)Phi y - 2(Phi x,y)Phi z, i.e.
// R_ijkl = w_jk w_il - w_ik w_jl - 2 w_ij w_kl with w the Kaehler form.
// Requires Phi^2 = -id within tol (NotAComplexStructure).
CurvTensor r_phi(const SkewEndo& phi, double tol = 1e-10);

// Same formula without the complex-structure gate. Exists for the
// verification battery's negative control, which must be able to feed a
// broken structure through the pipeline and watch the checks fail.
CurvTensor r_phi_unchecked(const SkewEndo& phi);

enum class Phi2Convention {
  canonical,
  // Deliberately mis-signed Phi_2 (e2 -> +e4, e4 -> -e2). The resulting
  // triple commutes instead of anticommuting on e1 and its second Kaehler
  // form sits on the wrong Hodge side; the verification battery uses it as a
  // negative control to prove its own sensitivity. Construction skips
  // check_structure.
  negative_control,
};

// The standard structure on an oriented orthonormal basis:
//   Phi_1: e1->e2, e2->-e1, e3->e4, e4->-e3
//   Phi_2: e1->e3, e3->-e1, e2->-e4, e4->e2
//   Phi_3 = Phi_1 Phi_2.
// Kaehler forms are f1+, f2+, f3+ for the standard basis; an
// orientation-reversed basis lands them all on the anti-self-dual side.
// Throws NotOrthonormal.
QuaternionStructure standard_structure(const OrientedBasis& b,
                                       Phi2Convention conv = Phi2Convention::canonical);

// sum_i lambda_i R_Phi_i. Trace-free (its own Weyl projection) exactly when
// lambda sums to zero.
CurvTensor synthesize(const QuaternionStructure& q, const std::array<double, 3>& lambda);

struct QuaternionDecomposition {
  QuaternionStructure structure;
  std::array<double, 3> lambdas{};  // ascending, sum 0 for Weyl input
  double residual = 0.0;            // |W - sum lambda_i R_Phi_i|_F
  bool orientation_flipped = false; // input was anti-self-dual
};

// Constructive inverse of synthesize for half-flat Weyl tensors: diagonalize
// J_W(e1), build the standard structure on the adapted frame, and set
// lambda = eigenvalues / 3. Anti-self-dual input is conjugated by
// e4 -> -e4, recovered, and conjugated back (flag recorded). Throws
// NotHalfFlat when classify(w) is Neither.
QuaternionDecomposition recover(const WeylTensor& w, double tol = 1e-8);

}  // namespace curv4
