#pragma once

// Symmetric polynomials in n variables in the monomial basis m_lambda with
// exact rational coefficients.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "selberg/laurent.hpp"
#include "selberg/partition.hpp"

namespace selberg {

class SymmetricPoly {
 public:
  SymmetricPoly() : nvars_(0) {}
  explicit SymmetricPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(const Partition& p, const Rational& c) {
    if (c.is_zero()) return;
    if (p.num_parts() > nvars_)
      throw std::invalid_argument("SymmetricPoly: partition has too many parts");
    auto [it, inserted] = coeffs_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SymmetricPoly& operator+=(const SymmetricPoly& o) {
    for (const auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
  }
  SymmetricPoly& operator-=(const SymmetricPoly& o) {
    for (const auto& [p, c] : o.coeffs_) add(p, -c);
    return *this;
  }
  friend SymmetricPoly operator+(SymmetricPoly a, const SymmetricPoly& b) { return a += b; }
  friend SymmetricPoly operator-(SymmetricPoly a, const SymmetricPoly& b) { return a -= b; }
  SymmetricPoly operator*(const Rational& c) const {
    SymmetricPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [p, a] : coeffs_) r.coeffs_.emplace(p, a * c);
    return r;
  }
  friend bool operator==(const SymmetricPoly& a, const SymmetricPoly& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  Rational eval(const std::vector<Rational>& point) const;
  double eval_double(const std::vector<double>& point) const;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : coeffs_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*m" + p.str();
    }
    return s;
  }

 private:
  int nvars_;
  std::map<Partition, Rational> coeffs_;
};

// Distinct permutations of the padded exponent vector of lambda.
inline std::vector<std::vector<long>> distinct_permutations(const Partition& lambda, int nvars) {
  std::vector<long> e(nvars, 0);
  for (int i = 0; i < lambda.num_parts(); ++i) e[i] = lambda.parts()[i];
  std::sort(e.begin(), e.end());
  std::vector<std::vector<long>> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

inline SymmetricPoly monomial_sym(const Partition& lambda, int nvars) {
  if (lambda.num_parts() > nvars)
    throw std::invalid_argument("monomial_sym: too many parts for nvars");
  SymmetricPoly p(nvars);
  p.add(lambda, Rational(1));
  return p;
}

inline LaurentPoly expand_to_laurent(const SymmetricPoly& p) {
  LaurentPoly out(p.nvars());
  for (const auto& [lambda, c] : p.coeffs()) {
    for (const auto& e : distinct_permutations(lambda, p.nvars())) {
      MultiIndex idx(e.begin(), e.end());
      out.add_term(idx, c);
    }
  }
  return out;
}

// Collect a Laurent polynomial known to be symmetric (nonnegative exponents)
// back to the monomial basis; throws if it is not in fact symmetric.
inline SymmetricPoly collect_symmetric(const LaurentPoly& f) {
  SymmetricPoly out(f.arity());
  std::map<Partition, std::pair<Rational, std::size_t>> seen;
  for (const auto& [e, c] : f.terms()) {
    std::vector<long> v(e.begin(), e.end());
    for (long x : v)
      if (x < 0) throw std::invalid_argument("collect_symmetric: negative exponent");
    std::sort(v.rbegin(), v.rend());
    Partition p(v);
    auto [it, inserted] = seen.emplace(p, std::make_pair(c, std::size_t{1}));
    if (!inserted) {
      if (it->second.first != c)
        throw std::invalid_argument("collect_symmetric: input not symmetric");
      ++it->second.second;
    }
  }
  for (const auto& [p, cc] : seen) {
    if (cc.second != distinct_permutations(p, f.arity()).size())
      throw std::invalid_argument("collect_symmetric: orbit incomplete");
    out.add(p, cc.first);
  }
  return out;
}

inline Rational SymmetricPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("SymmetricPoly::eval: wrong point length");
  Rational s(0);
  for (const auto& [lambda, c] : coeffs_) {
    Rational msum(0);
    for (const auto& e : distinct_permutations(lambda, nvars_)) {
      Rational t(1);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= point[i].pow(e[i]);
      msum += t;
    }
    s += c * msum;
  }
  return s;
}

inline double SymmetricPoly::eval_double(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& [lambda, c] : coeffs_) {
    double msum = 0;
    for (const auto& e : distinct_permutations(lambda, nvars_)) {
      double t = 1;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= std::pow(point[i], static_cast<double>(e[i]));
      msum += t;
    }
    s += c.to_double() * msum;
  }
  return s;
}

}  // namespace selberg
