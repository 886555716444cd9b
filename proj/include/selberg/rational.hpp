#pragma once

// Exact arbitrary-precision rational arithmetic, the substrate for all
// constant-term and Jack-polynomial computations. Backed by GMP; the
// canonical form (gcd-reduced, positive denominator) is maintained by
// mpq canonicalization on every construction path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace selberg {

// Error taxonomy shared across the library. Domain violations (parameters
// outside a formula's stated region) are distinct from pole errors (a gamma
// or sine factor sitting exactly on a singularity) so suites can assert the
// right failure.
class domain_violation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class size_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  // Accepts "num", "num/den" with arbitrary precision digits.
  explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

  static Rational from_mpz(const mpz_class& z) { return Rational(mpq_class(z)); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::invalid_argument("Rational: 0^negative");
    mpz_class num = v_.get_num(), den = v_.get_den();
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), k);
    mpq_class r = (e < 0) ? mpq_class(dp, np) : mpq_class(np, dp);
    r.canonicalize();
    return Rational(r);
  }

  double to_double() const { return v_.get_d(); }

  // Renders "num" for integers, "num/den" otherwise; this is the exact
  // serialization used in reports.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational::from_mpz(r);
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational::from_mpz(r);
}

// Rising factorial (b)_m = b (b+1) ... (b+m-1).
inline Rational pochhammer(const Rational& b, long m) {
  Rational r(1);
  for (long i = 0; i < m; ++i) r *= b + Rational(i);
  return r;
}

}  // namespace selberg
