#pragma once

// q-gamma, q-Pochhammer and the q-Selberg closed form, plus exact
// polynomial-in-q right-hand sides for the q-constant-term identities.
//
// Infinite q-products are truncated once the geometric tail of the
// log-series drops below 1e-14 (|log(1-w)| <= 2|w| for |w| <= 1/2).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "selberg/gamma.hpp"
#include "selberg/laurent.hpp"
#include "selberg/rational.hpp"

namespace selberg {

inline void check_q(double q) {
  if (!(q > 0) || !(q < 1)) throw domain_violation("q must lie in (0,1)");
}

// (a; q)_order for finite order, or (a; q)_infinity when order < 0.
inline double q_pochhammer(double a, double q, long order = -1) {
  check_q(q);
  if (order >= 0) {
    double r = 1, aq = a;
    for (long j = 0; j < order; ++j) {
      r *= 1 - aq;
      aq *= q;
    }
    return r;
  }
  double logr = 0, aq = a;
  while (std::fabs(aq) > 5e-16) {
    double f = 1 - aq;
    if (f <= 0) throw pole_error("q_pochhammer: factor vanished or negative");
    logr += std::log(f);
    aq *= q;
    if (std::fabs(aq) / (1 - q) < 5e-16) break;  // tail bound
  }
  return std::exp(logr);
}

// Gamma_q(x) = (q;q)_infty / (q^x;q)_infty * (1-q)^{1-x}; poles at
// x = 0, -1, -2, ... where q^x hits q^{-m}.
inline double q_gamma(double x, double q) {
  check_q(q);
  if (x <= 0 && x == std::floor(x)) throw pole_error("q_gamma: pole");
  double num = q_pochhammer(q, q);
  double den = q_pochhammer(std::pow(q, x), q);
  return num / den * std::pow(1 - q, 1 - x);
}

inline double log_q_gamma(double x, double q) {
  check_q(q);
  if (x <= 0 && x == std::floor(x)) throw pole_error("q_gamma: pole");
  double lognum = std::log(q_pochhammer(q, q));
  double logden = std::log(q_pochhammer(std::pow(q, x), q));
  return lognum - logden + (1 - x) * std::log(1 - q);
}

// Askey's q-Selberg evaluation for nonnegative integer k, with the product
// index convention fixed by the n=1 reduction to the q-beta integral and the
// q->1 limit to the classical Selberg product (the printed index in the
// source fails both; the Jackson-sum cross-check in the q suite is the
// arbiter).
inline GammaProductValue q_selberg_rhs(int n, double alpha, double beta, long k, double q) {
  check_q(q);
  if (!(alpha > 0) || k < 0)
    throw domain_violation("q_selberg_rhs: needs alpha > 0, k >= 0");
  GammaProductValue v = GammaProductValue::one();
  double binom2 = n * (n - 1) / 2.0, binom3 = n * (n - 1) * (n - 2) / 6.0;
  v.log_abs += (alpha * k * binom2 + 2.0 * k * k * binom3) * std::log(q);
  for (int j = 0; j < n; ++j) {
    v.log_abs += log_q_gamma(alpha + j * k, q) + log_q_gamma(beta + j * k, q) +
                 log_q_gamma(1 + (j + 1) * k, q) -
                 log_q_gamma(alpha + beta + (n + j - 1) * k, q) - log_q_gamma(1 + k, q);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Exact polynomial-in-q machinery. Univariate polynomials over Rational,
// dense in the (low) degrees that arise from (q;q)_m products.

class PolyQ {
 public:
  PolyQ() {}
  explicit PolyQ(Rational c) {
    if (!c.is_zero()) coef_.push_back(std::move(c));
  }
  static PolyQ one() { return PolyQ(Rational(1)); }
  // 1 - q^m
  static PolyQ one_minus_qpow(long m) {
    PolyQ p;
    p.coef_.assign(m + 1, Rational(0));
    p.coef_[0] = Rational(1);
    p.coef_[m] = Rational(-1);
    return p;
  }
  // (q;q)_m = prod_{i=1}^m (1-q^i)
  static PolyQ q_factorial(long m) {
    PolyQ p = one();
    for (long i = 1; i <= m; ++i) p = p * one_minus_qpow(i);
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  Rational coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(coef_.size())) ? coef_[i] : Rational(0);
  }

  PolyQ operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    PolyQ r;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (coef_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.coef_.size(); ++j)
        r.coef_[i + j] += coef_[i] * o.coef_[j];
    }
    r.trim();
    return r;
  }
  PolyQ operator+(const PolyQ& o) const {
    PolyQ r;
    r.coef_.assign(std::max(coef_.size(), o.coef_.size()), Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] += coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) r.coef_[i] += o.coef_[i];
    r.trim();
    return r;
  }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coef_ == b.coef_; }

  Rational eval(const Rational& q) const {
    Rational s(0);
    for (std::size_t i = coef_.size(); i-- > 0;) s = s * q + coef_[i];
    return s;
  }

  // Extracts a univariate polynomial in variable `var` from a Laurent
  // polynomial whose support lies entirely on that variable.
  static PolyQ from_laurent(const LaurentPoly& f, int var) {
    PolyQ p;
    for (const auto& [e, c] : f.terms()) {
      long d = 0;
      for (int i = 0; i < f.arity(); ++i) {
        if (e[i] == 0) continue;
        if (i != var) throw std::invalid_argument("PolyQ::from_laurent: foreign variable");
        d = e[i];
      }
      if (d < 0) throw std::invalid_argument("PolyQ::from_laurent: negative q exponent");
      if (d >= static_cast<long>(p.coef_.size())) p.coef_.resize(d + 1, Rational(0));
      p.coef_[d] += c;
    }
    p.trim();
    return p;
  }

  std::string str() const {
    if (coef_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (coef_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += coef_[i].str();
      if (i == 1) s += "*q";
      if (i > 1) s += "*q^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
  }
  std::vector<Rational> coef_;  // coef_[i] is the q^i coefficient
};

// q-binomial [n over k]_q as an exact pair (numerator, denominator) of
// (q;q)-factorials; callers compare cross-multiplied.
struct QRational {
  PolyQ num = PolyQ::one();
  PolyQ den = PolyQ::one();

  QRational& mul_qfact(long m) { num = num * PolyQ::q_factorial(m); return *this; }
  QRational& div_qfact(long m) { den = den * PolyQ::q_factorial(m); return *this; }
  QRational& mul(const QRational& o) {
    num = num * o.num;
    den = den * o.den;
    return *this;
  }
};

inline QRational q_binomial(long n, long k) {
  QRational r;
  r.mul_qfact(n).div_qfact(k).div_qfact(n - k);
  return r;
}

// q-Dyson RHS (q;q)_{a_1+...+a_n} / prod (q;q)_{a_i}.
inline QRational q_dyson_rhs(const std::vector<long>& a) {
  long s = 0;
  for (long ai : a) s += ai;
  QRational r;
  r.mul_qfact(s);
  for (long ai : a) r.div_qfact(ai);
  return r;
}

// q-Morris RHS for integer a, b, k; the (1-q) powers of Gamma_q cancel, so
// this is a pure ratio of (q;q)-factorials.
inline QRational q_morris_rhs_exact(int n, long a, long b, long k) {
  QRational r;
  for (int j = 0; j < n; ++j) {
    r.mul_qfact(a + b + j * k).mul_qfact((j + 1) * k);
    r.div_qfact(a + j * k).div_qfact(b + j * k).div_qfact(k);
  }
  return r;
}

}  // namespace selberg
