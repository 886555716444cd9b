#pragma once

// Jack polynomials P_lambda^{(1/gamma)} computed as eigenfunctions of the
// conjugated Calogero-Sutherland operator
//
//   D = sum_i (x_i d/dx_i)^2
//     + gamma * sum_{i != j} (x_i + x_j)/(x_i - x_j) * x_i d/dx_i,
//
// solved exactly on the dominance-triangular monomial basis. The first-order
// part is resolved on monomial orbits without rational-function arithmetic:
// for a symmetric input and a pair i<j acting on the orbit of x_i^a x_j^b
// (a > b, other exponents fixed),
//
//   (x_i+x_j)/(x_i-x_j) (x_i d_i - x_j d_j) [x^a x^b + x^b x^a]
//     = (a-b) [x^a x^b + x^b x^a + 2 sum_{r=1}^{a-b-1} x^{a-r} x^{b+r}].
//
// Also here: the evaluation formula, the constant-term inner product, norm
// formulas, and hypergeometric series with Jack polynomial argument.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "selberg/partition.hpp"
#include "selberg/symmetric.hpp"

namespace selberg {

struct JackParams {
  Rational gamma;  // the coupling; the Jack parameter is alpha = 1/gamma
  int nvars = 0;

  JackParams(Rational g, int n) : gamma(std::move(g)), nvars(n) {
    if (gamma.is_zero()) throw std::invalid_argument("JackParams: gamma = 0");
    if (nvars <= 0) throw std::invalid_argument("JackParams: nvars <= 0");
  }
};

class nongeneric_parameter_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies the conjugated Calogero-Sutherland operator exactly.
inline SymmetricPoly cs_apply(const SymmetricPoly& p, const JackParams& params) {
  const int n = params.nvars;
  if (p.nvars() != n)
    throw std::invalid_argument("cs_apply: nvars mismatch");
  LaurentPoly f = expand_to_laurent(p);
  LaurentPoly out(n);
  // Diagonal part: (x_i d_i)^2 multiplies each monomial by sum a_i^2.
  for (const auto& [e, c] : f.terms()) {
    long s2 = 0;
    for (int i = 0; i < n; ++i) s2 += static_cast<long>(e[i]) * e[i];
    out.add_term(e, c * Rational(s2));
  }
  // Pair part, processed once per orbit representative with e[i] > e[j].
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long a = e[i], b = e[j];
        if (a <= b) continue;
        Rational w = params.gamma * c * Rational(a - b);
        MultiIndex m = e;
        out.add_term(m, w);  // x_i^a x_j^b
        m[i] = static_cast<int32_t>(b);
        m[j] = static_cast<int32_t>(a);
        out.add_term(m, w);  // mirrored monomial
        for (long r = 1; r < a - b; ++r) {
          m[i] = static_cast<int32_t>(a - r);
          m[j] = static_cast<int32_t>(b + r);
          out.add_term(m, w * Rational(2));
        }
      }
  }
  return collect_symmetric(out);
}

// Eigenvalue of the operator on the leading monomial m_lambda (the diagonal
// entry of the triangular matrix).
inline Rational cs_diagonal(const Partition& lambda, const JackParams& params) {
  Rational e(0);
  for (int i = 0; i < lambda.num_parts(); ++i) {
    Rational li(lambda.parts()[i]);
    e += li * li + params.gamma * Rational(params.nvars - 1 - 2 * i) * li;
  }
  return e;
}

// Monic Jack polynomial in the monomial basis, by the dominance-triangular
// eigen-solve. Throws nongeneric_parameter_error when the eigenvalue of
// m_lambda collides with that of a dominated mu (non-generic gamma).
inline SymmetricPoly jack(const Partition& lambda, const JackParams& params) {
  const int n = params.nvars;
  if (lambda.num_parts() > n)
    throw std::invalid_argument("jack: partition has more parts than nvars");
  const long w = lambda.weight();

  // Basis: partitions of |lambda| dominated by lambda, in descending lex
  // order (a linear extension of dominance, lambda first).
  std::vector<Partition> basis;
  for (const auto& mu : partitions_of(w, n))
    if (dominance_leq(mu, lambda)) basis.push_back(mu);
  // partitions_of emits descending lex already; keep order, lambda is first.

  const int m = static_cast<int>(basis.size());
  std::map<Partition, int> index;
  for (int i = 0; i < m; ++i) index.emplace(basis[i], i);

  // Column k of the operator matrix: cs_apply(m_{basis[k]}).
  std::vector<std::vector<Rational>> col(m, std::vector<Rational>(m, Rational(0)));
  for (int k = 0; k < m; ++k) {
    SymmetricPoly img = cs_apply(monomial_sym(basis[k], n), params);
    for (const auto& [mu, c] : img.coeffs()) {
      auto it = index.find(mu);
      if (it == index.end())
        throw std::logic_error("jack: operator image escaped dominance ideal");
      col[k][it->second] = c;
    }
  }

  const Rational e_lambda = col[0][0];
  std::vector<Rational> a(m, Rational(0));
  a[0] = Rational(1);
  for (int nu = 1; nu < m; ++nu) {
    Rational rhs(0);
    for (int mu = 0; mu < nu; ++mu)
      if (!a[mu].is_zero()) rhs += col[mu][nu] * a[mu];
    Rational gap = e_lambda - col[nu][nu];
    if (gap.is_zero())
      throw nongeneric_parameter_error(
          "jack: eigenvalue collision between " + lambda.str() + " and " +
          basis[nu].str() + " at gamma = " + params.gamma.str());
    a[nu] = rhs / gap;
  }

  SymmetricPoly P(n);
  for (int i = 0; i < m; ++i) P.add(basis[i], a[i]);
  return P;
}

inline Rational jack_eval(const Partition& lambda, const JackParams& params,
                          const std::vector<Rational>& point) {
  return jack(lambda, params).eval(point);
}

// Stanley's evaluation formula P_lambda(1^n) = [n gamma]_lambda / c_lambda.
inline Rational jack_eval_ones_closed(const Partition& lambda, const JackParams& params) {
  Rational num = gen_pochhammer(Rational(params.nvars) * params.gamma, lambda, params.gamma);
  Rational den = hook_products(lambda, params.gamma).c;
  return num / den;
}

// Constant-term inner product at nonnegative integer coupling k:
// <f,g>_k = CT[ f(x) g(x^{-1}) prod_{i<j} ((1-x_i/x_j)(1-x_j/x_i))^k ].
inline Rational ct_inner_product(const SymmetricPoly& f, const SymmetricPoly& g, long k) {
  if (k < 0) throw std::invalid_argument("ct_inner_product: negative k");
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("ct_inner_product: nvars mismatch");
  const int n = f.nvars();
  LaurentPoly fx = expand_to_laurent(f);
  LaurentPoly gx = expand_to_laurent(g);
  LaurentPoly ginv(n);
  for (const auto& [e, c] : gx.terms()) {
    MultiIndex inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    ginv.add_term(inv, c);
  }
  LaurentPoly weight = LaurentPoly::constant(n, Rational(1));
  if (k > 0) {
    CTProductSpec spec;
    spec.arity = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CTFactor fac;
        fac.monomial.assign(n, 0);
        fac.monomial[i] = 1;
        fac.monomial[j] = -1;
        fac.power = k;
        spec.factors.push_back(std::move(fac));
      }
    weight = build_ct_product(spec);
  }
  return (fx * ginv * weight).constant_term_all();
}

// Exact rational norm, the RHS of the quadratic norm evaluation at integer
// coupling k:  c'_lambda / [1+(n-1)k]_lambda * (nk)!/(k!)^n * P_lambda(1^n).
inline Rational jack_norm_exact(const Partition& lambda, int nvars, long k) {
  if (k < 0) throw std::invalid_argument("jack_norm_exact: negative k");
  Rational gamma{static_cast<long>(k)};
  Rational cp = hook_products(lambda, gamma).cprime;
  Rational poch = gen_pochhammer(Rational(1) + Rational(nvars - 1) * gamma, lambda, gamma);
  Rational dyson = factorial(nvars * k) / factorial(k).pow(nvars);
  Rational ones = gen_pochhammer(Rational(nvars) * gamma, lambda, gamma) /
                  hook_products(lambda, gamma).c;
  if (k == 0) {
    // gamma = 0 degenerates the evaluation formula; P_lambda(1^n) at k=0 is
    // the number of distinct permutations of lambda (monomial count).
    ones = Rational(static_cast<long>(distinct_permutations(lambda, nvars).size()));
    cp = Rational(1);
    for (int i = 0; i < lambda.num_parts(); ++i)
      for (long j = 0; j < lambda.parts()[i]; ++j)
        cp *= Rational(lambda.arm(i, static_cast<int>(j)) + 1);
    poch = Rational(1);
    for (int i = 0; i < lambda.num_parts(); ++i)
      poch *= pochhammer(Rational(1), lambda.parts()[i]);
    dyson = Rational(1);
  }
  return cp / poch * dyson * ones;
}

// Hypergeometric series rFs with Jack polynomial argument, truncated by
// total partition weight. Exact for rational data. Throws pole_error when a
// denominator Pochhammer vanishes within the truncation range.
struct HyperSeriesSpec {
  std::vector<Rational> numerators;
  std::vector<Rational> denominators;
  Rational gamma;
  long max_weight = 0;
};

inline Rational hyper_series(const HyperSeriesSpec& spec, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  JackParams params(spec.gamma, n);
  Rational sum(0);
  for (const auto& lambda : partitions_up_to_weight(spec.max_weight, n)) {
    Rational term(1);
    for (const auto& a : spec.numerators)
      term *= gen_pochhammer(a, lambda, spec.gamma);
    for (const auto& b : spec.denominators) {
      Rational d = gen_pochhammer(b, lambda, spec.gamma);
      if (d.is_zero())
        throw pole_error("hyper_series: denominator Pochhammer pole at " + lambda.str());
      term /= d;
    }
    term /= hook_products(lambda, spec.gamma).cprime;
    if (!lambda.empty()) term *= jack(lambda, params).eval(x);
    sum += term;
  }
  return sum;
}

// Weight-by-weight coefficients (as symmetric polynomials) of the series;
// used when comparing against an independent product expansion.
inline SymmetricPoly hyper_series_truncation(const HyperSeriesSpec& spec, int nvars) {
  JackParams params(spec.gamma, nvars);
  SymmetricPoly out(nvars);
  for (const auto& lambda : partitions_up_to_weight(spec.max_weight, nvars)) {
    Rational term(1);
    for (const auto& a : spec.numerators)
      term *= gen_pochhammer(a, lambda, spec.gamma);
    for (const auto& b : spec.denominators) {
      Rational d = gen_pochhammer(b, lambda, spec.gamma);
      if (d.is_zero())
        throw pole_error("hyper_series: denominator Pochhammer pole at " + lambda.str());
      term /= d;
    }
    term /= hook_products(lambda, spec.gamma).cprime;
    if (lambda.empty()) {
      out.add(Partition{}, term);
    } else {
      out += jack(lambda, params) * term;
    }
  }
  return out;
}

}  // namespace selberg
