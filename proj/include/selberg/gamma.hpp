#pragma once

// Scalar gamma-family kernels: log_gamma, digamma, trigamma on the real
// line (reflection for negative non-integer arguments), a complex log-gamma,
// and the signed log-scale value type used for all gamma-product closed
// forms.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "selberg/rational.hpp"

namespace selberg {

namespace detail {

// Lanczos approximation, g = 7, 9 terms. Good to ~15 significant digits for
// Re(x) > 0.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline std::complex<double> log_gamma_positive(std::complex<double> z) {
  // valid for Re(z) > 0
  z -= 1.0;
  std::complex<double> a = kLanczos[0];
  std::complex<double> t = z + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace detail

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

inline double log_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("log_gamma: pole at " + std::to_string(x));
  if (x > 0) return detail::log_gamma_positive(std::complex<double>(x, 0)).real();
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  double s = std::sin(M_PI * x);
  return std::log(M_PI / std::fabs(s)) - log_gamma(1.0 - x);
}

// Sign of Gamma(x) on the real line (alternates between negative-integer
// poles).
inline int gamma_sign(double x) {
  if (x > 0) return 1;
  if (is_nonpositive_integer(x))
    throw pole_error("gamma_sign: pole at " + std::to_string(x));
  long k = static_cast<long>(std::floor(x));
  return (k % 2 == 0) ? 1 : -1;
}

inline std::complex<double> log_gamma_complex(std::complex<double> z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    throw pole_error("log_gamma_complex: pole");
  if (z.real() >= 0.5) return detail::log_gamma_positive(z);
  // reflection; branch handled by the principal logs (adequate away from the
  // negative real axis, which is all this library needs)
  std::complex<double> pi(M_PI, 0.0);
  return std::log(pi / std::sin(pi * z)) - detail::log_gamma_positive(1.0 - z);
}

inline double digamma(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("digamma: pole at " + std::to_string(x));
  double r = 0.0;
  if (x < 0) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma(1.0 - x) - M_PI / std::tan(M_PI * x);
  }
  while (x < 8.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series
  double inv = 1.0 / x, inv2 = inv * inv;
  r += std::log(x) - 0.5 * inv -
       inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
  return r;
}

inline double trigamma(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("trigamma: pole at " + std::to_string(x));
  if (x < 0) {
    double s = std::sin(M_PI * x);
    return -trigamma(1.0 - x) + M_PI * M_PI / (s * s);
  }
  double r = 0.0;
  while (x < 8.0) {
    r += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  r += inv * (1.0 + 0.5 * inv +
              inv2 * (1.0 / 6 - inv2 * (1.0 / 30 - inv2 * (1.0 / 42 - inv2 / 30))));
  return r;
}

// Signed log-scale value of a product/ratio of gamma factors. A sign of 0
// marks an exact zero (e.g. a gamma pole in a denominator).
struct GammaProductValue {
  double log_abs = 0.0;
  int sign = 1;

  static GammaProductValue one() { return {0.0, 1}; }
  static GammaProductValue zero() { return {-std::numeric_limits<double>::infinity(), 0}; }

  GammaProductValue& mul_gamma(double x) {
    log_abs += log_gamma(x);
    sign *= gamma_sign(x);
    return *this;
  }
  GammaProductValue& div_gamma(double x) {
    log_abs -= log_gamma(x);
    sign *= gamma_sign(x);
    return *this;
  }
  GammaProductValue& mul_real(double v) {
    if (v == 0.0) { *this = zero(); return *this; }
    log_abs += std::log(std::fabs(v));
    if (v < 0) sign = -sign;
    return *this;
  }
  GammaProductValue& div_real(double v) {
    if (v == 0.0) throw std::invalid_argument("GammaProductValue: divide by 0");
    return mul_real(1.0 / v);
  }
  GammaProductValue& mul(const GammaProductValue& o) {
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
  GammaProductValue& div(const GammaProductValue& o) {
    if (o.sign == 0) throw std::invalid_argument("GammaProductValue: divide by 0");
    log_abs -= o.log_abs;
    sign *= o.sign;
    return *this;
  }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

}  // namespace selberg
