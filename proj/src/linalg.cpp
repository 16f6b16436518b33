#include "curv4/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace curv4 {

Vec4 normalized(const Vec4& x) {
  const double n = norm(x);
  if (n <= 1e-12) throw ZeroVector();
  return (1.0 / n) * x;
}

double det4(const Mat4& m) {
  // Cofactor expansion along the first row via 3x3 minors.
  auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
  };
  return m(0, 0) * minor3(1, 2, 3, 1, 2, 3) - m(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
         m(0, 2) * minor3(1, 2, 3, 0, 1, 3) - m(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

Mat4 cholesky4(const Mat4& g, double pivot_tol) {
  Mat4 l;
  for (int j = 0; j < 4; ++j) {
    double d = g(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= pivot_tol) throw SingularMetric("metric not positive definite");
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < 4; ++i) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

Mat4 inverse_transpose_lower4(const Mat4& lower) {
  // Solve L X = I, then transpose: columns of X^T are the frame vectors.
  Mat4 x;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      double s = (r == c) ? 1.0 : 0.0;
      for (int k = 0; k < r; ++k) s -= lower(r, k) * x(k, c);
      x(r, c) = s / lower(r, r);
    }
  }
  return x.transposed();
}

Mat4 spd_inverse4(const Mat4& g) {
  const Mat4 l = cholesky4(g);
  // Solve L y = e_c then L^T x = y, column by column.
  Mat4 inv;
  for (int c = 0; c < 4; ++c) {
    std::array<double, 4> y{};
    for (int r = 0; r < 4; ++r) {
      double s = (r == c) ? 1.0 : 0.0;
      for (int k = 0; k < r; ++k) s -= l(r, k) * y[static_cast<size_t>(k)];
      y[static_cast<size_t>(r)] = s / l(r, r);
    }
    for (int r = 3; r >= 0; --r) {
      double s = y[static_cast<size_t>(r)];
      for (int k = r + 1; k < 4; ++k) s -= l(k, r) * inv(k, c);
      inv(r, c) = s / l(r, r);
    }
  }
  return inv;
}

SymEndo SymEndo::from(const Mat4& a, double tol) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c)
      worst = std::max(worst, std::abs(a(r, c) - a(c, r)));
  if (worst > tol) throw NonSymmetric(worst);
  return symmetrized(a);
}

SymEndo SymEndo::symmetrized(const Mat4& a) {
  SymEndo s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.m(r, c) = 0.5 * (a(r, c) + a(c, r));
  return s;
}

SkewEndo SkewEndo::from(const Mat4& a, double tol) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c)
      worst = std::max(worst, std::abs(a(r, c) + a(c, r)));
  if (worst > tol) throw NonSkew(worst);
  return skewed(a);
}

SkewEndo SkewEndo::skewed(const Mat4& a) {
  SkewEndo s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.m(r, c) = 0.5 * (a(r, c) - a(c, r));
  return s;
}

namespace {

template <int N>
double offdiag_frobenius(const Mat<N>& a) {
  double s = 0.0;
  for (int r = 0; r < N; ++r)
    for (int c = r + 1; c < N; ++c) s += a(r, c) * a(r, c);
  return std::sqrt(2.0 * s);
}

}  // namespace

template <int N>
EigenSys<N> sym_eigen(const Mat<N>& s, double sym_tol) {
  double worst = 0.0;
  for (int r = 0; r < N; ++r)
    for (int c = r + 1; c < N; ++c)
      worst = std::max(worst, std::abs(s(r, c) - s(c, r)));
  if (worst > sym_tol) throw NonSymmetric(worst);

  Mat<N> a;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) a(r, c) = 0.5 * (s(r, c) + s(c, r));
  Mat<N> v = Mat<N>::identity();

  const double stop = 1e-15 * std::max(1.0, a.frobenius());
  for (int sweep = 0; sweep < 64 && offdiag_frobenius(a) > stop; ++sweep) {
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const double tau = sn / (1.0 + c);

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < N; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - sn * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + sn * (arp - tau * arq);
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - sn * (vrq + tau * vrp);
          v(r, q) = vrq + sn * (vrp - tau * vrq);
        }
      }
    }
  }

  std::array<int, N> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenSys<N> out;
  for (int k = 0; k < N; ++k) {
    const int src = order[static_cast<size_t>(k)];
    out.values[static_cast<size_t>(k)] = a(src, src);
    // Deterministic sign: largest-magnitude component positive.
    int imax = 0;
    for (int r = 1; r < N; ++r)
      if (std::abs(v(r, src)) > std::abs(v(imax, src))) imax = r;
    const double sgn = v(imax, src) < 0 ? -1.0 : 1.0;
    for (int r = 0; r < N; ++r) out.vectors(r, k) = sgn * v(r, src);
  }
  return out;
}

template EigenSys<3> sym_eigen<3>(const Mat3&, double);
template EigenSys<4> sym_eigen<4>(const Mat4&, double);
template EigenSys<6> sym_eigen<6>(const Mat6&, double);

double gram_defect(const OrientedBasis& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double g = dot(b.e[static_cast<size_t>(i)], b.e[static_cast<size_t>(j)]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

void check_oriented_basis(const OrientedBasis& b, double tol) {
  const double defect = gram_defect(b);
  if (defect > tol) throw NotOrthonormal(defect);
  const double d = det4(b.as_matrix());
  if (d * b.orientation <= 0)
    throw NotOrthonormal(std::abs(d - b.orientation));
}

OrientedBasis basis_from_columns(const Mat4& m, double tol) {
  OrientedBasis b;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) b.e[static_cast<size_t>(c)][r] = m(r, c);
  b.orientation = det4(m) >= 0 ? +1 : -1;
  check_oriented_basis(b, tol);
  return b;
}

OrientedBasis extend_to_oriented_onb(const Vec4& x) {
  OrientedBasis b;
  b.e[0] = normalized(x);

  int filled = 1;
  while (filled < 4) {
    // Orthogonalize each coordinate axis against what we have and keep the
    // one with the largest residual (ties -> lowest index). Deterministic.
    Vec4 best;
    double best_norm = -1.0;
    for (int cand = 0; cand < 4; ++cand) {
      Vec4 r = axis(cand);
      for (int k = 0; k < filled; ++k) {
        const Vec4& u = b.e[static_cast<size_t>(k)];
        r -= dot(r, u) * u;
      }
      const double rn = norm(r);
      if (rn > best_norm + 1e-15) {
        best_norm = rn;
        best = r;
      }
    }
    // Re-orthogonalize once for clean Gram at machine precision.
    for (int k = 0; k < filled; ++k) {
      const Vec4& u = b.e[static_cast<size_t>(k)];
      best -= dot(best, u) * u;
    }
    b.e[static_cast<size_t>(filled)] = (1.0 / norm(best)) * best;
    ++filled;
  }

  if (det4(b.as_matrix()) < 0) b.e[3] = -b.e[3];
  b.orientation = +1;
  return b;
}

TwoForm hodge_star(const TwoForm& w) {
  // *e12=e34, *e13=-e24, *e14=e23 and back again; exact involution.
  TwoForm s;
  s.c[0] = w.c[5];
  s.c[1] = -w.c[4];
  s.c[2] = w.c[3];
  s.c[3] = w.c[2];
  s.c[4] = -w.c[1];
  s.c[5] = w.c[0];
  return s;
}

SdBasis sd_basis() {
  SdBasis b;
  b.plus[0].c = {1, 0, 0, 0, 0, 1};    // e12 + e34
  b.plus[1].c = {0, 1, 0, 0, -1, 0};   // e13 - e24
  b.plus[2].c = {0, 0, 1, 1, 0, 0};    // e14 + e23
  b.minus[0].c = {1, 0, 0, 0, 0, -1};  // e12 - e34
  b.minus[1].c = {0, 1, 0, 0, 1, 0};   // e13 + e24
  b.minus[2].c = {0, 0, 1, -1, 0, 0};  // e14 - e23
  return b;
}

Mat4 random_rotation(uint64_t seed) {
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Mat4 m;
    for (auto& x : m.e) x = rng.normal();
    // Gram-Schmidt on columns.
    bool ok = true;
    for (int c = 0; c < 4 && ok; ++c) {
      Vec4 col;
      for (int r = 0; r < 4; ++r) col[r] = m(r, c);
      for (int k = 0; k < c; ++k) {
        Vec4 u;
        for (int r = 0; r < 4; ++r) u[r] = m(r, k);
        col -= dot(col, u) * u;
      }
      const double n = norm(col);
      if (n < 1e-8) {
        ok = false;
        break;
      }
      for (int r = 0; r < 4; ++r) m(r, c) = col[r] / n;
    }
    if (!ok) continue;
    if (det4(m) < 0)
      for (int r = 0; r < 4; ++r) m(r, 3) = -m(r, 3);
    return m;
  }
  // Degenerate draws 16 times in a row cannot happen in practice.
  return Mat4::identity();
}

}  // namespace curv4
