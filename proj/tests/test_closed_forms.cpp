#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "selberg/closed_forms.hpp"

using namespace selberg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("log_gamma kernel") {
  CHECK_THAT(log_gamma(1.0), WithinAbs(0.0, 1e-14));
  CHECK_THAT(log_gamma(0.5), WithinRel(0.5 * std::log(M_PI), 1e-13));
  CHECK_THAT(log_gamma(10.0), WithinRel(std::log(362880.0), 1e-13));
  // 13+ significant digits across (0, 1e4): recurrence consistency
  for (double x : {1e-3, 0.37, 3.25, 41.5, 977.25, 9999.5}) {
    double lhs = log_gamma(x + 1), rhs = log_gamma(x) + std::log(x);
    CHECK_THAT(lhs, WithinRel(rhs, 1e-13));
  }
  // reflection for negative non-integer x
  double x = -2.3;
  CHECK_THAT(log_gamma(x) + log_gamma(1 - x),
             WithinRel(std::log(M_PI / std::fabs(std::sin(M_PI * x))), 1e-12));
  CHECK(gamma_sign(-0.5) == -1);
  CHECK(gamma_sign(-1.5) == 1);
  CHECK_THROWS_AS(log_gamma(0.0), pole_error);
  CHECK_THROWS_AS(log_gamma(-3.0), pole_error);
}

TEST_CASE("digamma and trigamma") {
  CHECK_THAT(digamma(2.0) - digamma(1.0), WithinAbs(1.0, 1e-13));
  CHECK_THAT(digamma(1.0), WithinAbs(-0.57721566490153286, 1e-13));
  // psi'(1) = pi^2/6
  CHECK_THAT(trigamma(1.0), WithinRel(M_PI * M_PI / 6, 1e-12));
  CHECK_THAT(trigamma(2.0), WithinRel(M_PI * M_PI / 6 - 1.0, 1e-12));
  // derivative cross-check
  double h = 1e-5, x = 3.7;
  CHECK_THAT((digamma(x + h) - digamma(x - h)) / (2 * h), WithinAbs(trigamma(x), 1e-6));
}

TEST_CASE("complex log gamma") {
  std::complex<double> z(2.5, 1.5);
  // recurrence log G(z+1) = log G(z) + log z
  auto lhs = log_gamma_complex(z + 1.0), rhs = log_gamma_complex(z) + std::log(z);
  CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-12));
  // matches real version on the positive axis
  CHECK_THAT(log_gamma_complex({4.2, 0.0}).real(), WithinRel(log_gamma(4.2), 1e-13));
}

TEST_CASE("selberg rhs values and domain") {
  // n=1 reduces to the beta integral
  double v = selberg_rhs(1, 2.0, 3.0, 0.7).value();
  CHECK_THAT(v, WithinRel(std::exp(log_gamma(2) + log_gamma(3) - log_gamma(5)), 1e-12));
  // n=2, alpha=beta=gamma=1: direct polynomial integration gives 1/6
  CHECK_THAT(selberg_rhs(2, 1, 1, 1).value(), WithinRel(1.0 / 6, 1e-12));
  CHECK(selberg_exact(2, 1, 1, 1) == Rational(1, 6));
  CHECK(selberg_exact(1, 2, 2, 0) == Rational(1, 6));  // B(2,2)

  CHECK_THROWS_AS(selberg_rhs(2, -0.5, 1, 1), domain_violation);
  CHECK_THROWS_AS(selberg_rhs(3, 1, 1, -0.4), domain_violation);
  // analytic variant evaluates continuations but still throws on poles
  CHECK_NOTHROW(selberg_rhs_analytic(2, -0.5, 1.0, 0.25));
  CHECK_THROWS_AS(selberg_rhs_analytic(2, -1.0, 1.0, 0.0), pole_error);
}

TEST_CASE("morris rhs values") {
  // a=b=0: Dyson normalization Gamma(1+n g)/Gamma^n(1+g)
  double g = 0.6;
  double expect = std::exp(log_gamma(1 + 3 * g) - 3 * log_gamma(1 + g));
  CHECK_THAT(morris_rhs(3, 0, 0, g).value(), WithinRel(expect, 1e-12));
  CHECK_THAT(morris_rhs(2, 0, 0, 1).value(), WithinRel(2.0, 1e-12));
  CHECK(morris_exact(2, 0, 0, 1) == Rational(2));
  CHECK(morris_exact(1, 1, 1, 0) == Rational(2));  // Gamma(3)/Gamma(2)^2
  CHECK_THROWS_AS(morris_rhs(2, -0.7, -0.4, 0.5), domain_violation);
}

TEST_CASE("group product and bc mehta") {
  // degrees (1..n) is the Mehta integral normalization
  double g = 0.85;
  double fn = 1;
  for (int j = 1; j <= 3; ++j)
    fn *= std::exp(log_gamma(1 + j * g) - log_gamma(1 + g));
  CHECK_THAT(mehta_rhs(3, g).value(), WithinRel(fn, 1e-12));
  // degrees (1,2), gamma=1: Gaussian integral of (x-y)^2 has value 2
  CHECK_THAT(group_product_rhs({1, 2}, 1).value(), WithinRel(2.0, 1e-12));
  CHECK_THROWS_AS(group_product_rhs({}, 1.0), std::invalid_argument);

  // bc_mehta with c = gamma gives the B_n product, c = 0 the D_n product
  int n = 3;
  double bn = 1, dn = 1;
  for (int i = 1; i <= n; ++i) bn *= std::exp(log_gamma(1 + 2 * i * g) - log_gamma(1 + g));
  dn = std::exp(log_gamma(1 + n * g) - log_gamma(1 + g));
  for (int i = 1; i <= n - 1; ++i) dn *= std::exp(log_gamma(1 + 2 * i * g) - log_gamma(1 + g));
  CHECK_THAT(bc_mehta_rhs(n, g, g).value(), WithinRel(bn, 1e-11));
  CHECK_THAT(bc_mehta_rhs(n, 0, g).value(), WithinRel(dn, 1e-11));
}

TEST_CASE("laguerre normalization") {
  CHECK_THAT(laguerre_rhs(1, 2.5, 1.0).value(), WithinRel(std::exp(log_gamma(2.5)), 1e-12));
  // W_2(1,1) = (1/2) G(1)G(1)G(2)G(2) = 1/2
  CHECK_THAT(laguerre_rhs(2, 1, 1).value(), WithinRel(0.5, 1e-12));
  CHECK_THROWS_AS(laguerre_rhs(2, -1.0, 1.0), domain_violation);
}

TEST_CASE("aux rhs evaluations") {
  EvalParams p;
  p.n = 1;
  p.alpha = 1;
  p.beta = 1;
  p.gamma = 0;
  CHECK_THAT(aux_rhs(AuxKind::cauchy_sc, p).value(), WithinRel(0.5, 1e-12));

  // askey-richards n=1 is the beta integral over the interval
  EvalParams ar;
  ar.n = 1;
  ar.alpha = 1.3;
  ar.beta = 2.2;
  ar.gamma = 0.4;
  double expect = std::exp(log_gamma(1.3) + log_gamma(2.2) - log_gamma(3.5));
  CHECK_THAT(aux_rhs(AuxKind::askey_richards, ar).value(), WithinRel(expect, 1e-12));

  // gauss summation product vs the Selberg route:
  // prefactor(b,c,g) S_n(b-(n-1)g, c-a-b-(n-1)g, g) with z = 1
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2;
    double g = u(rng);
    double a = u(rng), b2 = 1.2 + u(rng), c = b2 + 1.0 + (n - 1) * g + u(rng) + a;
    EvalParams gp;
    gp.n = n;
    gp.a = a;
    gp.b = b2;
    gp.c = c;
    gp.gamma = g;
    GammaProductValue lhs = aux_rhs(AuxKind::gauss_2f1, gp);
    GammaProductValue rhs = selberg_rhs_analytic(n, b2 - (n - 1) * g, c - a - b2 - (n - 1) * g, g);
    for (int j = 0; j < n; ++j) {
      rhs.mul_gamma(c - j * g)
          .mul_real(std::exp(log_gamma(1 + g)))
          .div_gamma(b2 - j * g)
          .div_gamma(c - b2 - j * g)
          .div_gamma(1 + (j + 1) * g);
    }
    CHECK_THAT(lhs.log_abs, WithinAbs(rhs.log_abs, 1e-10));
    CHECK(lhs.sign == rhs.sign);
  }
}

TEST_CASE("dotsenko fateev chain") {
  // p = n is the Selberg value itself
  GammaProductValue s = dotsenko_fateev_chain(2, 2, 0.3, 0.4, 0.2);
  CHECK_THAT(s.value(), WithinRel(selberg_rhs(2, 0.3, 0.4, 0.2).value(), 1e-12));
  // n=1: S_{1,1}/S_{1,0} = sin(pi(a+b))/sin(pi a)
  double a = 0.3, b = 0.25;
  double s11 = dotsenko_fateev_chain(1, 1, a, b, 0.37).value();
  double s10 = dotsenko_fateev_chain(1, 0, a, b, 0.37).value();
  CHECK_THAT(s11 / s10, WithinRel(std::sin(M_PI * (a + b)) / std::sin(M_PI * a), 1e-10));
  // transformation S_{n,p}(a,b,g) = S_{n,n-p}(1-a-b-2(n-1)g, b, g)
  double lhs = dotsenko_fateev_chain(2, 1, 0.2, 0.3, 0.1).value();
  double rhs = dotsenko_fateev_chain(2, 1, 1 - 0.2 - 0.3 - 2 * 0.1, 0.3, 0.1).value();
  CHECK_THAT(lhs, WithinRel(rhs, 1e-10));
  CHECK_THROWS_AS(dotsenko_fateev_chain(2, 0, 1.0, 1.0, 0.5), pole_error);
}

TEST_CASE("frobenius coefficients") {
  auto c = frobenius_coeffs(3, 1, 0.4, 0.8, 0.15);
  CHECK(c[0] == 0.0);            // i < p vanishes
  CHECK(c[1] == 1.0);            // c_{p,p} = 1, empty product
  CHECK(std::isfinite(c[2]));
  CHECK(std::isfinite(c[3]));
  // independent re-evaluation of the display for c_{0,1}
  double alpha = 0.5, tau = 1.0 / 3, g = 1.0 / 3;
  auto cf = frobenius_coeffs(2, 0, alpha, tau, g);
  double direct = -std::sin(M_PI * g) * std::sin(M_PI * alpha) /
                  (std::sin(M_PI * g) * std::sin(M_PI * (alpha + tau - 1)));
  CHECK_THAT(cf[1], WithinRel(direct, 1e-12));
  // alpha + tau = 1 puts a sine zero in the denominator
  CHECK_THROWS_AS(frobenius_coeffs(2, 0, 0.5, 0.5, 1.0 / 3), pole_error);
}

TEST_CASE("coulomb gas statistics") {
  auto [m1, v1] = coulomb_stats(1, 2.0);
  CHECK(m1 == 0.0);
  CHECK(v1 == 0.0);
  // analytic digamma value equals central finite difference of log Z
  for (int n : {2, 4}) {
    for (double beta : {1.0, 2.0, 4.0}) {
      auto [mean, var] = coulomb_stats(n, beta);
      double h = 1e-5;
      double fd1 = -(coulomb_log_z(n, beta + h) - coulomb_log_z(n, beta - h)) / (2 * h);
      double fd2 = (coulomb_log_z(n, beta + h) - 2 * coulomb_log_z(n, beta) +
                    coulomb_log_z(n, beta - h)) / (h * h);
      CHECK_THAT(mean, WithinAbs(fd1, 1e-8));
      CHECK_THAT(var, WithinAbs(fd2, 1e-5));
    }
  }
  // convexity of log Z in beta
  for (int n = 2; n <= 6; ++n)
    for (double beta : {1.0, 2.0, 4.0}) CHECK(coulomb_stats(n, beta).second >= 0.0);
}

TEST_CASE("decimation compatibility") {
  for (auto [r, k, n] : {std::tuple<int, long, int>{1, 0, 2}, {2, 0, 2}, {1, 1, 3}}) {
    auto rep = decimation_check(r, k, n);
    CHECK(rep.exponents_match);
    CHECK(rep.residual < 1e-10);
  }
}

TEST_CASE("identity web residuals") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    double a = u(rng), b = u(rng), g = 0.1 + 0.5 * u(rng);
    CHECK(anderson_recurrence_residual(n, a, b, g) < 1e-10);
    CHECK(small_alpha_identity_residual(std::max(n, 1), b, 0.55 + 0.5 * u(rng)) < 1e-10);
  }
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    // keep both sides away from gamma poles: small gamma, non-integer alpha
    double a = 0.21 + 0.1 * u(rng), b = 0.31 + 0.1 * u(rng), g = 0.011 + 0.02 * u(rng);
    CHECK(functional_equation_residual(n, a, b, g) < 1e-10);
  }
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    long k = static_cast<long>(rng() % 3);
    double a = u(rng), b = 0.05 + 0.4 * u(rng);  // non-integer b
    CHECK(sm_bridge_residual(n, a, b, k) < 1e-10);
  }
}

TEST_CASE("small alpha finite approach") {
  // finite-alpha version approaches the limit with O(alpha) error
  double alpha = 1e-6, beta = 1.3, g = 0.8;
  int n = 3;
  double lhs = alpha * selberg_rhs(n, alpha, beta, g).value();
  double rhs = n * selberg_rhs(n - 1, 2 * g, beta, g).value();
  CHECK_THAT(lhs, WithinRel(rhs, 1e-4));
}

TEST_CASE("mehta stirling limit") {
  for (int n : {1, 2, 3})
    for (double g : {0.5, 1.0}) CHECK(mehta_limit_deviation(n, g, 20.0) < 0.02);
}

TEST_CASE("dixon 3f2 terminating") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    double a = u(rng) + 0.5, b = u(rng) * 0.5;
    long m = 1 + static_cast<long>(rng() % 6);
    CHECK(dixon_3f2_residual(a, b, m) < 1e-10);
  }
}

TEST_CASE("spacing coefficient guards") {
  CHECK_THROWS_AS(spacing_coefficient(3, 1.0, 4), std::invalid_argument);
}

TEST_CASE("jack norm rhs log form matches exact rational norm") {
  for (int n : {2, 3}) {
    for (long k : {1L, 2L}) {
      JackParams p(Rational(k), n);
      for (const auto& lam : partitions_up_to_weight(3, n)) {
        double lhs = jack_norm_rhs(lam, p).value();
        double rhs = jack_norm_exact(lam, n, k).to_double();
        CHECK_THAT(lhs, WithinRel(rhs, 1e-10));
      }
    }
  }
}
