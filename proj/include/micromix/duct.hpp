#pragma once

// Fourier-series solution for fully developed laminar flow in a rectangular
// duct (Poisson problem with no-slip walls). Used as the validation oracle
// for the Navier-Stokes solver and for pressure-drop estimates.

#include <cmath>
#include <numbers>

#include "micromix/errors.hpp"

namespace micromix {

namespace detail {

// cosh(y)/cosh(ymax) evaluated without overflow, |y| <= ymax.
inline double cosh_ratio(double y, double ymax) {
  y = std::abs(y);
  return std::exp(y - ymax) * (1.0 + std::exp(-2.0 * y)) /
         (1.0 + std::exp(-2.0 * ymax));
}

}  // namespace detail

// Series evaluation for a duct of width `aspect` and height 1 (so the
// cross-section is x in [-aspect/2, aspect/2], z in [-1/2, 1/2]).
struct DuctProfile {
  double aspect = 1.0;
  int n_terms = 50;
  double f_re = 0.0;            // friction factor * Reynolds, D_h based
  double umax_over_umean = 0.0;

  // u / U_mean at normalized cross-section coordinates in [-1, 1].
  double normalized(double xhat, double zhat) const {
    return raw(xhat, zhat) / u_mean_raw;
  }

  // Series sum with the common prefactor dropped; internal scale.
  double raw(double xhat, double zhat) const {
    const double a = 0.5;
    const double b = 0.5 * aspect;
    const double x = xhat * b;
    const double z = zhat * a;
    double sum = 0.0;
    double sign = 1.0;
    for (int m = 0; m < n_terms; ++m) {
      const int i = 2 * m + 1;
      const double alpha = i * std::numbers::pi / (2.0 * a);
      const double term = sign / (double(i) * i * i) *
                          (1.0 - detail::cosh_ratio(alpha * x, alpha * b)) *
                          std::cos(alpha * z);
      sum += term;
      sign = -sign;
    }
    return sum;
  }

  double u_mean_raw = 1.0;
};

inline DuctProfile analytic_duct_profile(double aspect_ratio, int n_terms = 50) {
  if (aspect_ratio <= 0.0)
    throw ValidationError("analytic_duct_profile: aspect_ratio must be > 0");
  if (n_terms < 10)
    throw ValidationError("analytic_duct_profile: n_terms must be >= 10");

  DuctProfile prof;
  prof.aspect = aspect_ratio;
  prof.n_terms = n_terms;

  const double a = 0.5;
  const double b = 0.5 * aspect_ratio;
  const double pi = std::numbers::pi;

  // Flow rate per unit (G/mu): Q = (4 b a^3 / 3) [1 - 192 a/(pi^5 b) * S],
  // S = sum over odd i of tanh(i pi b / 2a) / i^5.
  double s5 = 0.0;
  for (int m = 0; m < n_terms; ++m) {
    const int i = 2 * m + 1;
    s5 += std::tanh(i * pi * b / (2.0 * a)) / std::pow(double(i), 5.0);
  }
  const double q = (4.0 * b * a * a * a / 3.0) *
                   (1.0 - 192.0 * a / (pi * pi * pi * pi * pi * b) * s5);
  const double area = 4.0 * a * b;
  const double u_mean = q / area;

  // The series carries prefactor 16 a^2 / pi^3 relative to raw().
  const double prefactor = 16.0 * a * a / (pi * pi * pi);
  prof.u_mean_raw = u_mean / prefactor;

  const double d_h = 4.0 * a * b / (a + b);  // 4A/P
  // Delta p / L = G, so fRe = 2 G D_h^2 / (mu U) with G/mu = 1 here.
  prof.f_re = 2.0 * d_h * d_h / u_mean;
  prof.umax_over_umean = prof.raw(0.0, 0.0) / prof.u_mean_raw;
  return prof;
}

}  // namespace micromix
