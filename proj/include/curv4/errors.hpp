#pragma once

#include <stdexcept>
#include <string>

namespace curv4 {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetric : Error {
  double magnitude;
  explicit NonSymmetric(double mag)
      : Error("matrix is not symmetric (max |S_ij - S_ji| = " +
              std::to_string(mag) + ")"),
        magnitude(mag) {}
};

struct NonSkew : Error {
  double magnitude;
  explicit NonSkew(double mag)
      : Error("matrix is not skew-symmetric (max |S_ij + S_ji| = " +
              std::to_string(mag) + ")"),
        magnitude(mag) {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("vector norm below 1e-12; cannot normalize") {}
};

struct NotOrthonormal : Error {
  double magnitude;
  explicit NotOrthonormal(double mag)
      : Error("basis is not orthonormal (max Gram defect = " +
              std::to_string(mag) + ")"),
        magnitude(mag) {}
};

// Which curvature symmetry a raw component array violates.
enum class Symmetry { Antisymmetry, PairSymmetry, Bianchi };

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Antisymmetry: return "antisymmetry";
    case Symmetry::PairSymmetry: return "pair_symmetry";
    case Symmetry::Bianchi: return "bianchi";
  }
  return "?";
}

struct SymmetryViolation : Error {
  Symmetry which;
  double magnitude;
  SymmetryViolation(Symmetry w, double mag)
      : Error(std::string("curvature symmetry violated: ") + to_string(w) +
              " (max defect = " + std::to_string(mag) + ")"),
        which(w),
        magnitude(mag) {}
};

struct NotAComplexStructure : Error {
  double magnitude;
  explicit NotAComplexStructure(double mag)
      : Error("endomorphism does not square to -identity (max defect = " +
              std::to_string(mag) + ")"),
        magnitude(mag) {}
};

struct NotHalfFlat : Error {
  explicit NotHalfFlat(const std::string& detail)
      : Error("Weyl tensor is neither self-dual nor anti-self-dual: " +
              detail) {}
};

struct BadParameters : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

struct SingularMetric : Error {
  using Error::Error;
};

struct UnknownChart : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IOError : Error {
  using Error::Error;
};

}  // namespace curv4
