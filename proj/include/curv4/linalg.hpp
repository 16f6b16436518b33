#pragma once

// Dense linear-algebra kernel for the 4-dimensional curvature algebra:
// vectors and small square matrices, a cyclic-Jacobi symmetric eigensolver,
// oriented orthonormal bases, and 2-forms with the Hodge star.
//
// Everything here is a pure function on immutable values. Matrices are tiny
// (3x3, 4x4, 6x6) and stored dense row-major; determinism matters more than
// asymptotics, so the eigensolver is plain cyclic Jacobi run to machine
// precision.

#include <array>
#include <cmath>
#include <cstdint>

#include "curv4/errors.hpp"

namespace curv4 {

// ---------------------------------------------------------------------------
// Vec4

struct Vec4 {
  std::array<double, 4> v{};

  double& operator[](int i) { return v[static_cast<size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<size_t>(i)]; }

  Vec4& operator+=(const Vec4& o) {
    for (int i = 0; i < 4; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec4& operator-=(const Vec4& o) {
    for (int i = 0; i < 4; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vec4& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }

  friend Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend Vec4 operator*(double s, Vec4 a) { return a *= s; }
  friend Vec4 operator*(Vec4 a, double s) { return a *= s; }
  friend Vec4 operator-(Vec4 a) { return a *= -1.0; }
};

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline Vec4 axis(int i) {
  Vec4 e;
  e[i] = 1.0;
  return e;
}

// Throws ZeroVector below the 1e-12 cutoff.
Vec4 normalized(const Vec4& x);

// ---------------------------------------------------------------------------
// Mat<N>: tiny dense square matrix, row-major.

template <int N>
struct Mat {
  std::array<double, static_cast<size_t>(N) * N> e{};

  double& operator()(int r, int c) { return e[static_cast<size_t>(r) * N + c]; }
  double operator()(int r, int c) const {
    return e[static_cast<size_t>(r) * N + c];
  }

  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat transposed() const {
    Mat t;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius() const {
    double s = 0.0;
    for (double x : e) s += x * x;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : e) m = std::max(m, std::abs(x));
    return m;
  }

  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (auto& x : e) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= -1.0; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat m;
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) {
        const double ark = a(r, k);
        if (ark == 0.0) continue;
        for (int c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
};

using Mat3 = Mat<3>;
using Mat4 = Mat<4>;
using Mat6 = Mat<6>;

inline Vec4 operator*(const Mat4& m, const Vec4& x) {
  Vec4 y;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) y[r] += m(r, c) * x[c];
  return y;
}

double det4(const Mat4& m);

// Cholesky factor (lower triangular, g = L L^T). Throws SingularMetric when a
// pivot drops below tol.
Mat4 cholesky4(const Mat4& g, double pivot_tol = 1e-13);

// Inverse of an SPD matrix via its Cholesky factor.
Mat4 spd_inverse4(const Mat4& g);

// Inverse transpose of a lower-triangular factor; columns form the
// g-orthonormal frame used by the metric layer.
Mat4 inverse_transpose_lower4(const Mat4& lower);

// ---------------------------------------------------------------------------
// Symmetric / skew endomorphisms of R^4.
//
// Both wrappers store an exactly (anti)symmetrized copy, so the type invariant
// holds bit-for-bit after construction; the factory rejects inputs whose
// defect exceeds tol.

struct SymEndo {
  Mat4 m;

  static SymEndo from(const Mat4& a, double tol = 1e-12);
  // Accepts any matrix; keeps (A + A^T)/2. For results of contractions that
  // are symmetric up to rounding.
  static SymEndo symmetrized(const Mat4& a);
};

struct SkewEndo {
  Mat4 m;

  static SkewEndo from(const Mat4& a, double tol = 1e-12);
  static SkewEndo skewed(const Mat4& a);
};

// ---------------------------------------------------------------------------
// Symmetric eigen-decomposition (cyclic Jacobi).

template <int N>
struct EigenSys {
  std::array<double, N> values;  // ascending
  Mat<N> vectors;                // orthonormal columns, vectors(.,k) <-> values[k]
};

// Throws NonSymmetric when |S_ij - S_ji| exceeds sym_tol. Eigenvalues come
// back ascending; each eigenvector's largest-magnitude component is made
// positive so results are deterministic. Within a degenerate cluster the
// returned vectors are just some orthonormal basis of the eigenspace.
template <int N>
EigenSys<N> sym_eigen(const Mat<N>& s, double sym_tol = 1e-12);

extern template EigenSys<3> sym_eigen<3>(const Mat3&, double);
extern template EigenSys<4> sym_eigen<4>(const Mat4&, double);
extern template EigenSys<6> sym_eigen<6>(const Mat6&, double);

inline EigenSys<4> sym_eigen(const SymEndo& s) { return sym_eigen<4>(s.m); }

// ---------------------------------------------------------------------------
// Oriented orthonormal bases.

struct OrientedBasis {
  std::array<Vec4, 4> e;
  int orientation = +1;  // sign of det[e1 e2 e3 e4]

  Mat4 as_matrix() const {  // columns are the basis vectors
    Mat4 m;
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) m(r, c) = e[static_cast<size_t>(c)][r];
    return m;
  }
};

// Max |Gram - I| entry.
double gram_defect(const OrientedBasis& b);

// Checks orthonormality within tol and that the stored orientation matches
// the determinant sign. Throws NotOrthonormal.
void check_oriented_basis(const OrientedBasis& b, double tol = 1e-10);

// Basis from the columns of an orthogonal matrix; orientation read off det.
OrientedBasis basis_from_columns(const Mat4& m, double tol = 1e-10);

// Completes x/|x| to an oriented orthonormal basis with orientation +1
// (first vector is x/|x|). Throws ZeroVector.
OrientedBasis extend_to_oriented_onb(const Vec4& x);

// ---------------------------------------------------------------------------
// 2-forms on R^4.
//
// Coefficients are stored in the fixed lexicographic basis order
//   e^12, e^13, e^14, e^23, e^24, e^34,
// orthonormal under <e^ij, e^kl> = delta. All 6x6 operators use this order.

struct TwoForm {
  std::array<double, 6> c{};

  TwoForm& operator+=(const TwoForm& o) {
    for (int i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
  }
  TwoForm& operator-=(const TwoForm& o) {
    for (int i = 0; i < 6; ++i) c[i] -= o.c[i];
    return *this;
  }
  TwoForm& operator*=(double s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(double s, TwoForm a) { return a *= s; }
};

// 0-based i < j  ->  position in the canonical basis order.
inline int pair_index(int i, int j) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[i][j];
}

inline double dot(const TwoForm& a, const TwoForm& b) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += a.c[i] * b.c[i];
  return s;
}

inline double norm(const TwoForm& a) { return std::sqrt(dot(a, a)); }

// Hodge star for the standard orientation e^1^e^2^e^3^e^4. An exact signed
// coefficient permutation, so star(star(w)) == w bit-for-bit.
TwoForm hodge_star(const TwoForm& w);

struct SdBasis {
  std::array<TwoForm, 3> plus;   // f1+, f2+, f3+
  std::array<TwoForm, 3> minus;  // f1-, f2-, f3-
};

// The +/-1 Hodge eigenbasis f1+- = e^12 +- e^34, f2+- = e^13 -+ e^24,
// f3+- = e^14 +- e^23; mutually orthogonal, squared norm 2.
SdBasis sd_basis();

// ---------------------------------------------------------------------------
// Deterministic randomness helpers (shared by generators and the battery).

struct Rng {
  explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  // splitmix64; chosen over std distributions so streams are identical on
  // every platform.
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }
  double normal() {
    // Box-Muller; u clamped away from 0.
    double u = uniform01();
    if (u < 1e-300) u = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u));
    return r * std::cos(6.283185307179586476925286766559 * uniform01());
  }

  uint64_t state;
};

// Haar-ish random rotation (det +1), deterministic in the seed.
Mat4 random_rotation(uint64_t seed);

}  // namespace curv4
