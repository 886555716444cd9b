#pragma once

// Theta and elliptic gamma kernels and the elliptic beta/Selberg
// right-hand sides. The double products are truncated at an index where the
// geometric tail of the log-series is below 1e-14 (using
// |log(1-w)| <= 2|w| for |w| <= 1/2).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

using Complex = std::complex<double>;

inline void check_nome(Complex p) {
  if (!(std::abs(p) < 1)) throw domain_violation("elliptic: |nome| must be < 1");
}

// Normalised theta: theta(z; p) = (z; p)_inf (p/z; p)_inf.
inline Complex theta(Complex z, Complex p) {
  check_nome(p);
  if (z == Complex(0, 0)) throw domain_violation("theta: z = 0");
  Complex logr = 0;
  Complex a = z, b = p / z;
  double pm = std::abs(p);
  for (int i = 0;; ++i) {
    logr += std::log(1.0 - a) + std::log(1.0 - b);
    a *= p;
    b *= p;
    double tail = (std::abs(a) + std::abs(b)) / std::max(1e-300, 1.0 - pm);
    if (tail < 5e-16 || i > 20000) break;
  }
  return std::exp(logr);
}

// Elliptic gamma Gamma(z; p, q) = prod_{i,j>=0} (1 - p^{i+1} q^{j+1} / z) /
// (1 - z p^i q^j).
inline Complex elliptic_gamma(Complex z, Complex p, Complex q) {
  check_nome(p);
  check_nome(q);
  if (z == Complex(0, 0)) throw domain_violation("elliptic_gamma: z = 0");
  double pm = std::abs(p), qm = std::abs(q);
  double m = std::max(pm, qm);
  // index cutoff: |z| m^I and m^{I} / |z| both below tolerance
  double zm = std::abs(z);
  double big = std::max(zm, 1.0 / zm) * 2.0;
  int cutoff = 40;
  if (m > 0) {
    cutoff = static_cast<int>(std::ceil(std::log(5e-16 / big) / std::log(m))) + 2;
    cutoff = std::max(cutoff, 4);
  }
  Complex logr = 0;
  Complex pi_pow = 1.0;
  for (int i = 0; i <= cutoff; ++i) {
    Complex qj_pow = 1.0;
    for (int j = 0; j <= cutoff; ++j) {
      Complex base = pi_pow * qj_pow;        // p^i q^j
      Complex num = 1.0 - p * q * base / z;  // 1 - p^{i+1} q^{j+1} / z
      Complex den = 1.0 - z * base;
      if (den == Complex(0, 0))
        throw pole_error("elliptic_gamma: z on pole lattice");
      logr += std::log(num) - std::log(den);
      qj_pow *= q;
      if (std::abs(base) * big < 1e-18) break;
    }
    pi_pow *= p;
    if (std::abs(pi_pow) * big < 1e-18) break;
  }
  return std::exp(logr);
}

// Gamma(t z; p, q) Gamma(t / z; p, q).
inline Complex elliptic_gamma_pm(Complex t, Complex z, Complex p, Complex q) {
  return elliptic_gamma(t * z, p, q) * elliptic_gamma(t / z, p, q);
}

// --- Spiridonov elliptic beta integral RHS -----------------------------------

struct EllipticParams {
  Complex p, q;
  std::vector<Complex> t;  // six parameters for n = 1; plus cross parameter
  Complex tcross = 0;      // the t of the n-dimensional integral
};

// (a; p)_infinity for complex a, |p| < 1.
inline Complex pochhammer_inf(Complex a, Complex p) {
  check_nome(p);
  Complex logr = 0;
  Complex ap = a;
  double pm = std::abs(p);
  for (int i = 0;; ++i) {
    logr += std::log(1.0 - ap);
    ap *= p;
    if (std::abs(ap) / std::max(1e-300, 1.0 - pm) < 5e-16 || i > 100000) break;
  }
  return std::exp(logr);
}

// General-n RHS of the elliptic Selberg integral:
// 2^n n! / ((p;p)^n (q;q)^n) prod_{j=1}^n [ Gamma(t^j)/Gamma(t)
//   prod_{r<s} Gamma(t^{j-1} t_r t_s) ],
// under the balance condition t^{2n-2} prod t_r = pq. For n = 1 the
// Gamma(t)/Gamma(t) factor cancels exactly and this reduces to the elliptic
// beta RHS.
inline Complex elliptic_selberg_rhs(int n, const EllipticParams& ep) {
  check_nome(ep.p);
  check_nome(ep.q);
  if (ep.t.size() != 6)
    throw std::invalid_argument("elliptic_selberg_rhs: needs six t_r");
  Complex prod = 1;
  for (auto& tr : ep.t) {
    if (!(std::abs(tr) < 1)) throw domain_violation("elliptic_selberg_rhs: |t_r| >= 1");
    prod *= tr;
  }
  Complex tpow = std::pow(ep.tcross, 2 * n - 2);
  if (n > 1 && !(std::abs(ep.tcross) < 1))
    throw domain_violation("elliptic_selberg_rhs: |t| >= 1");
  if (std::abs(tpow * prod - ep.p * ep.q) > 1e-12)
    throw domain_violation("elliptic_selberg_rhs: balance violated");

  double fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Complex v = std::pow(2.0, n) * fact;
  Complex pp = pochhammer_inf(ep.p, ep.p), qq = pochhammer_inf(ep.q, ep.q);
  v /= std::pow(pp, n) * std::pow(qq, n);
  for (int j = 1; j <= n; ++j) {
    if (j > 1)  // j = 1 factor Gamma(t)/Gamma(t) = 1 identically
      v *= elliptic_gamma(std::pow(ep.tcross, j), ep.p, ep.q) /
           elliptic_gamma(ep.tcross, ep.p, ep.q);
    Complex tj = std::pow(ep.tcross, j - 1);
    for (int r = 0; r < 6; ++r)
      for (int s = r + 1; s < 6; ++s)
        v *= elliptic_gamma(tj * ep.t[r] * ep.t[s], ep.p, ep.q);
  }
  return v;
}

inline Complex elliptic_beta_rhs(const EllipticParams& ep) {
  EllipticParams e1 = ep;
  e1.tcross = 1.0;  // t^{2n-2} = 1 at n = 1; balance check unaffected
  return elliptic_selberg_rhs(1, e1);
}

// Integrand of the elliptic beta integral on the unit circle (z = e^{i
// theta}): prod_r Gamma(t_r z^{+-1}) / Gamma(z^{+-2}).
inline Complex elliptic_beta_integrand(Complex z, const EllipticParams& ep) {
  Complex num = 1;
  for (auto& tr : ep.t) num *= elliptic_gamma_pm(tr, z, ep.p, ep.q);
  Complex den = elliptic_gamma(z * z, ep.p, ep.q) * elliptic_gamma(1.0 / (z * z), ep.p, ep.q);
  return num / den;
}

// --- Gustafson n = 1 in the p -> 0, t_5 -> 0 limit ---------------------------

// Weight Delta(x; t_1..t_4) at n = 1 (the cross-coupling t drops out):
// (x^2;q)_inf (x^{-2};q)_inf / prod_r (t_r x;q)_inf (t_r/x;q)_inf.
inline Complex gustafson_n1_integrand(Complex x, const std::vector<Complex>& t, double q) {
  Complex num = pochhammer_inf(x * x, q) * pochhammer_inf(1.0 / (x * x), q);
  Complex den = 1;
  for (auto& tr : t) den *= pochhammer_inf(tr * x, q) * pochhammer_inf(tr / x, q);
  return num / den;
}

// CT value: 2 (t_1 t_2 t_3 t_4; q)_inf / ((q;q)_inf prod_{r<s} (t_r t_s;q)_inf).
inline Complex gustafson_n1_rhs(const std::vector<Complex>& t, double q) {
  if (t.size() != 4) throw std::invalid_argument("gustafson_n1_rhs: needs four t_r");
  Complex v = 2.0 * pochhammer_inf(t[0] * t[1] * t[2] * t[3], q);
  v /= pochhammer_inf(q, q);
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) v /= pochhammer_inf(t[r] * t[s], q);
  return v;
}

// The same value reached through the elliptic chain: eliminate t_6 by the
// balance condition, rewrite Gamma(pq/A) = 1/Gamma(A), evaluate at p = 0
// where Gamma(z; 0, q) = 1/(z; q)_inf, then take t_5 = 0.
inline Complex gustafson_n1_from_elliptic_chain(const std::vector<Complex>& t, double q) {
  if (t.size() != 4) throw std::invalid_argument("needs four t_r");
  // Surviving factors: 2/((q;q)) prod_{r<s<=4} Gamma(t_r t_s;0,q)
  //                    * Gamma(t1 t2 t3 t4; 0, q)^{-1 at p=0 via 1/Gamma}
  Complex v = 2.0 / pochhammer_inf(q, q);
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s)
      v *= 1.0 / pochhammer_inf(t[r] * t[s], q);  // Gamma(z;0,q) = 1/(z;q)_inf
  // 1/Gamma(prod_{s<=4, s != r} t_s) terms with t_5 inside vanish to 1 except
  // the r = 5 term, which is (t1 t2 t3 t4; q)_inf.
  v *= pochhammer_inf(t[0] * t[1] * t[2] * t[3], q);
  return v;
}

}  // namespace selberg
