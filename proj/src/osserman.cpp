#include "curv4/osserman.hpp"

#include <algorithm>
#include <cmath>

namespace curv4 {

SymEndo jacobi_op(const CurvTensor& r, const Vec4& x) {
  // <J(x) e_c, e_w> = R(e_c, x, x, e_w); symmetric by pair symmetry.
  Mat4 m;
  for (int c = 0; c < 4; ++c)
    for (int w = 0; w < 4; ++w) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j) {
        if (x[j] == 0.0) continue;
        for (int k = 0; k < 4; ++k) s += r(c, j, k, w) * x[j] * x[k];
      }
      m(c, w) = s;
    }
  return SymEndo::symmetrized(m);
}

SymEndo conf_jacobi_op(const CurvTensor& r, const Vec4& x) {
  return jacobi_op(weyl(r).t, x);
}

JacobiSpectrum jacobi_spectrum(const CurvTensor& r, const Vec4& unit_x) {
  JacobiSpectrum s;
  s.eigenvalues = sym_eigen(jacobi_op(r, unit_x)).values;
  s.direction = unit_x;
  return s;
}

std::vector<Vec4> sample_directions(int n) {
  std::vector<Vec4> dirs;
  dirs.reserve(static_cast<size_t>(std::max(n, 12)));
  for (int i = 0; i < 4 && static_cast<int>(dirs.size()) < n; ++i)
    dirs.push_back(axis(i));
  // Diagonal directions (1, +-1, +-1, +-1)/2; the mirror images add nothing
  // because J(-x) = J(x).
  for (int s = 0; s < 8 && static_cast<int>(dirs.size()) < n; ++s) {
    Vec4 d;
    d[0] = 0.5;
    d[1] = (s & 1) ? -0.5 : 0.5;
    d[2] = (s & 2) ? -0.5 : 0.5;
    d[3] = (s & 4) ? -0.5 : 0.5;
    dirs.push_back(d);
  }
  // Kronecker (R3) low-discrepancy sequence in the cube, pushed onto S^3
  // through the uniform Hopf-style parametrization.
  const double g = 1.2207440846057595;  // root of x^4 = x + 1
  const double a1 = 1.0 / g, a2 = 1.0 / (g * g), a3 = 1.0 / (g * g * g);
  const double two_pi = 6.283185307179586476925286766559;
  int i = 0;
  while (static_cast<int>(dirs.size()) < n) {
    const double u = std::fmod(0.5 + a1 * (i + 1), 1.0);
    const double v = std::fmod(0.5 + a2 * (i + 1), 1.0);
    const double t = std::fmod(0.5 + a3 * (i + 1), 1.0);
    const double rt = std::sqrt(t), rt1 = std::sqrt(1.0 - t);
    Vec4 d;
    d[0] = rt1 * std::cos(two_pi * u);
    d[1] = rt1 * std::sin(two_pi * u);
    d[2] = rt * std::cos(two_pi * v);
    d[3] = rt * std::sin(two_pi * v);
    dirs.push_back(d);
    ++i;
  }
  return dirs;
}

OssermanScan osserman_sampled(const CurvTensor& r, bool use_weyl, int n,
                              double tol) {
  if (n < 8) throw BadParameters("osserman_sampled needs n >= 8");
  if (!(tol > 0.0)) throw BadParameters("osserman_sampled needs tol > 0");

  const CurvTensor t = use_weyl ? weyl(r).t : r;
  const double scale = 1.0 + t.frobenius();
  const std::vector<Vec4> dirs = sample_directions(n);

  OssermanScan scan;
  scan.reference_spectrum = sym_eigen(jacobi_op(t, dirs[0])).values;
  scan.worst_direction = dirs[0];
  for (size_t d = 1; d < dirs.size(); ++d) {
    const auto spec = sym_eigen(jacobi_op(t, dirs[d])).values;
    double dev = 0.0;
    for (int k = 0; k < 4; ++k)
      dev = std::max(dev, std::abs(spec[k] - scan.reference_spectrum[k]));
    if (dev > scan.worst_deviation) {
      scan.worst_deviation = dev;
      scan.worst_direction = dirs[d];
    }
  }
  scan.osserman = scan.worst_deviation <= tol * scale;
  return scan;
}

namespace {

// sigma_1..sigma_4 of a symmetric 4x4 via power traces and Newton identities.
std::array<double, 4> elementary_symmetric(const Mat4& m) {
  const Mat4 m2 = m * m;
  double p1 = m.trace(), p2 = 0.0, p3 = 0.0, p4 = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      p2 += m(r, c) * m(c, r);
      p3 += m2(r, c) * m(c, r);
      p4 += m2(r, c) * m2(c, r);
    }
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2.0;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
  return {e1, e2, e3, e4};
}

// In-place tensor-product Newton interpolation on integer nodes
// {-k, ..., k} along every axis, followed by conversion to monomial
// coefficients. vals is indexed [i1][i2][i3][i4] flattened with stride
// nn = 2k+1 per axis; vals[idx(i.)] = f(nodes[i1], ..., nodes[i4]).
void grid_to_monomials(std::vector<double>& vals, int k) {
  const int nn = 2 * k + 1;
  std::vector<double> nodes(static_cast<size_t>(nn));
  for (int i = 0; i < nn; ++i) nodes[static_cast<size_t>(i)] = i - k;

  // Newton basis -> monomial conversion matrix: N_m(x) = prod_{t<m}(x - t_t).
  std::vector<double> conv(static_cast<size_t>(nn) * nn, 0.0);
  conv[0] = 1.0;
  for (int m = 1; m < nn; ++m) {
    for (int e = m; e >= 0; --e) {
      const double lower = e > 0 ? conv[static_cast<size_t>((m - 1) * nn + e - 1)] : 0.0;
      conv[static_cast<size_t>(m * nn + e)] =
          lower - nodes[static_cast<size_t>(m - 1)] *
                      conv[static_cast<size_t>((m - 1) * nn + e)];
    }
  }

  const int total = nn * nn * nn * nn;
  std::array<int, 4> stride = {nn * nn * nn, nn * nn, nn, 1};
  std::vector<double> line(static_cast<size_t>(nn));
  for (int ax = 0; ax < 4; ++ax) {
    const int st = stride[static_cast<size_t>(ax)];
    for (int base = 0; base < total; ++base) {
      // Visit each line once: entries whose coordinate along ax is 0.
      if ((base / st) % nn != 0) continue;
      for (int i = 0; i < nn; ++i) line[static_cast<size_t>(i)] = vals[static_cast<size_t>(base + i * st)];
      // Divided differences.
      for (int j = 1; j < nn; ++j)
        for (int m = nn - 1; m >= j; --m)
          line[static_cast<size_t>(m)] =
              (line[static_cast<size_t>(m)] - line[static_cast<size_t>(m - 1)]) /
              (nodes[static_cast<size_t>(m)] - nodes[static_cast<size_t>(m - j)]);
      // Newton coefficients -> monomial coefficients.
      for (int e = 0; e < nn; ++e) {
        double s = 0.0;
        for (int m = e; m < nn; ++m)
          s += line[static_cast<size_t>(m)] * conv[static_cast<size_t>(m * nn + e)];
        vals[static_cast<size_t>(base + e * st)] = s;
      }
    }
  }
}

}  // namespace

OssermanCertificate osserman_exact(const CurvTensor& r, bool use_weyl,
                                   double tol) {
  CurvTensor t = use_weyl ? weyl(r).t : r;
  OssermanCertificate cert;

  const double nrm = t.frobenius();
  if (nrm == 0.0) {
    cert.osserman = true;
    return cert;
  }
  t *= 1.0 / nrm;

  const auto sig_ref = elementary_symmetric(jacobi_op(t, axis(0)).m);
  cert.reference_sigma = sig_ref;

  for (int k = 1; k <= 4; ++k) {
    const int nn = 2 * k + 1;
    const double down = std::pow(static_cast<double>(k), 2.0 * k);
    std::vector<double> vals(static_cast<size_t>(nn) * nn * nn * nn);

    size_t idx = 0;
    Vec4 x;
    for (int i1 = 0; i1 < nn; ++i1)
      for (int i2 = 0; i2 < nn; ++i2)
        for (int i3 = 0; i3 < nn; ++i3)
          for (int i4 = 0; i4 < nn; ++i4) {
            x[0] = i1 - k;
            x[1] = i2 - k;
            x[2] = i3 - k;
            x[3] = i4 - k;
            const double sig = elementary_symmetric(jacobi_op(t, x).m)[static_cast<size_t>(k - 1)];
            const double n2 = dot(x, x);
            double pw = 1.0;
            for (int p = 0; p < k; ++p) pw *= n2;
            // sigma_k and sigma_ref |x|^2k are homogeneous of degree 2k, so
            // dividing by k^2k evaluates the difference at x/k instead:
            // coefficients come out on the unit-radius lattice.
            vals[idx++] = (sig - sig_ref[static_cast<size_t>(k - 1)] * pw) / down;
          }

    grid_to_monomials(vals, k);

    double worst = 0.0;
    std::array<int, 4> worst_exp{};
    idx = 0;
    for (int e1 = 0; e1 < nn; ++e1)
      for (int e2 = 0; e2 < nn; ++e2)
        for (int e3 = 0; e3 < nn; ++e3)
          for (int e4 = 0; e4 < nn; ++e4) {
            const double c = vals[idx++];
            if (std::abs(c) > worst) {
              worst = std::abs(c);
              worst_exp = {e1, e2, e3, e4};
            }
          }

    if (worst > tol) {
      cert.osserman = false;
      cert.failing_power = k;
      cert.offending.exponents = worst_exp;
      cert.offending.coefficient = worst;
      return cert;
    }
  }

  cert.osserman = true;
  return cert;
}

AdaptedFrame adapted_basis(const WeylTensor& w, const Vec4& unit_x) {
  const Vec4 x = normalized(unit_x);
  const SymEndo j = jacobi_op(w.t, x);
  const OrientedBasis completion = extend_to_oriented_onb(x);

  Mat3 restricted;
  for (int a = 0; a < 3; ++a) {
    const Vec4 ju = j.m * completion.e[static_cast<size_t>(a + 1)];
    for (int b = 0; b <= a; ++b) {
      const double v = dot(completion.e[static_cast<size_t>(b + 1)], ju);
      restricted(b, a) = restricted(a, b) = v;
    }
  }
  const EigenSys<3> eig = sym_eigen<3>(restricted);

  AdaptedFrame frame;
  frame.basis.e[0] = x;
  for (int col = 0; col < 3; ++col) {
    Vec4 v;
    for (int b = 0; b < 3; ++b)
      v += eig.vectors(b, col) * completion.e[static_cast<size_t>(b + 1)];
    frame.basis.e[static_cast<size_t>(col + 1)] = v;
  }
  frame.eigenvalues = eig.values;

  if (det4(frame.basis.as_matrix()) < 0) {
    frame.basis.e[3] = -frame.basis.e[3];
    frame.flipped_last = true;
  }
  frame.basis.orientation = +1;
  return frame;
}

}  // namespace curv4
