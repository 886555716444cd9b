#pragma once

// Sparse multivariate Laurent polynomials over Rational with constant-term
// extraction. Variables are anonymous slots 0..arity-1; callers that carry a
// q variable place it in a fixed slot and restrict it to exponent >= 0.
// Terms are kept in a std::map under lexicographic MultiIndex order, which
// fixes a canonical iteration order for reproducible reports.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

using MultiIndex = std::vector<int32_t>;

struct MultiIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, MultiIndexLess>;

  // Global guard against runaway expansions; see set_term_limit.
  static std::size_t& term_limit() {
    static std::size_t limit = 10'000'000;
    return limit;
  }

  LaurentPoly() : arity_(0) {}
  explicit LaurentPoly(int arity) : arity_(arity) {}

  static LaurentPoly constant(int arity, const Rational& c) {
    LaurentPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(MultiIndex(arity, 0), c);
    return p;
  }
  static LaurentPoly monomial(int arity, const MultiIndex& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity)
      throw std::invalid_argument("LaurentPoly: exponent length != arity");
    LaurentPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }
  // x_i as a monomial, and x_i^k for Laurent k.
  static LaurentPoly var(int arity, int i, int k = 1) {
    MultiIndex e(arity, 0);
    e[i] = k;
    return monomial(arity, e, Rational(1));
  }

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const MultiIndex& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    check_size();
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator*(const LaurentPoly& o) const {
    require_same_arity(o);
    LaurentPoly r(arity_);
    MultiIndex e(arity_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly operator*(const Rational& c) const {
    LaurentPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(long e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly base = *this, r = constant(arity_, Rational(1));
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  // Sub-polynomial of terms with zero exponent in each selected variable.
  LaurentPoly constant_term(const std::vector<int>& vars) const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (int v : vars)
        if (e[v] != 0) { keep = false; break; }
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }

  // Constant term in all variables, as a scalar.
  Rational constant_term_all() const {
    return coeff(MultiIndex(arity_, 0));
  }

  // Substitute variable v -> value (a Rational), eliminating it from the
  // support but keeping the arity (exponent becomes 0). Used for q -> 1.
  LaurentPoly substitute(int v, const Rational& value) const {
    LaurentPoly r(arity_);
    MultiIndex e(arity_);
    for (const auto& [ein, c] : terms_) {
      e = ein;
      long k = e[v];
      e[v] = 0;
      r.add_term(e, c * value.pow(k));
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw std::invalid_argument("LaurentPoly::eval: point length != arity");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < arity_; ++i)
        if (e[i] != 0) t *= point[i].pow(e[i]);
      s += t;
    }
    return s;
  }

  double eval_double(const std::vector<double>& point) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
      double t = c.to_double();
      for (int i = 0; i < arity_; ++i)
        if (e[i] != 0) t *= std::pow(point[i], e[i]);
      s += t;
    }
    return s;
  }

  // Total degree of a term = sum of exponents; max over support.
  long total_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long s = std::accumulate(e.begin(), e.end(), 0L);
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      for (int i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        out += "*";
        out += (i < static_cast<int>(names.size())) ? names[i] : ("x" + std::to_string(i + 1));
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  void require_same_arity(const LaurentPoly& o) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument("LaurentPoly: arity mismatch");
  }
  void check_size() const {
    if (terms_.size() > term_limit())
      throw size_limit_error("LaurentPoly: term-count ceiling exceeded");
  }

  int arity_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Product builders for constant-term work.
//
// A CT product is a list of factors (1 - m)^p with m a Laurent monomial, or a
// finite q-shifted factorial (m; q)_ord = prod_{l=0}^{ord-1} (1 - m q^l) with
// q living in a designated variable slot.

struct CTFactor {
  MultiIndex monomial;  // exponent vector of m
  long power = 1;       // (1 - m)^power   (used when q_order < 0)
  long q_order = -1;    // when >= 0: (m; q)_{q_order}
};

struct CTProductSpec {
  int arity = 0;
  int q_var = -1;  // slot of q, or -1 if no q present
  std::vector<CTFactor> factors;
};

inline LaurentPoly build_ct_product(const CTProductSpec& spec) {
  LaurentPoly acc = LaurentPoly::constant(spec.arity, Rational(1));
  for (const auto& f : spec.factors) {
    if (f.q_order < 0) {
      if (f.power < 0)
        throw std::invalid_argument("build_ct_product: negative power");
      LaurentPoly base = LaurentPoly::constant(spec.arity, Rational(1)) -
                         LaurentPoly::monomial(spec.arity, f.monomial, Rational(1));
      acc *= base.pow(f.power);
    } else {
      if (spec.q_var < 0)
        throw std::invalid_argument("build_ct_product: q factor without q slot");
      for (long l = 0; l < f.q_order; ++l) {
        MultiIndex e = f.monomial;
        e[spec.q_var] += static_cast<int32_t>(l);
        acc *= LaurentPoly::constant(spec.arity, Rational(1)) -
               LaurentPoly::monomial(spec.arity, e, Rational(1));
      }
    }
  }
  return acc;
}

// Dyson product prod_{i != j} (1 - x_i/x_j)^{a_i} in n = a.size() variables.
inline LaurentPoly dyson_product(const std::vector<long>& a) {
  int n = static_cast<int>(a.size());
  CTProductSpec spec;
  spec.arity = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      CTFactor f;
      f.monomial.assign(n, 0);
      f.monomial[i] = 1;
      f.monomial[j] = -1;
      f.power = a[i];
      spec.factors.push_back(std::move(f));
    }
  return build_ct_product(spec);
}

// q-Dyson product prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j};
// q occupies the last slot (arity n+1).
inline LaurentPoly q_dyson_product(const std::vector<long>& a) {
  int n = static_cast<int>(a.size());
  CTProductSpec spec;
  spec.arity = n + 1;
  spec.q_var = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CTFactor f;
      f.monomial.assign(n + 1, 0);
      f.monomial[i] = 1;
      f.monomial[j] = -1;
      f.q_order = a[i];
      spec.factors.push_back(f);
      CTFactor g;
      g.monomial.assign(n + 1, 0);
      g.monomial[j] = 1;
      g.monomial[i] = -1;
      g.monomial[n] = 1;  // leading q
      g.q_order = a[j];
      spec.factors.push_back(std::move(g));
    }
  return build_ct_product(spec);
}

}  // namespace selberg
