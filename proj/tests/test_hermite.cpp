#include <doctest.h>
#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "io2/hermite.hpp"

using io2::eval_psi;
using io2::eval_psi_all;
using io2::eval_psi_general;
using io2::FrameParams;
using io2::gauss_hermite;
using io2::integrate;
using io2::psi_prime;
using io2::QuadratureRule;

namespace {

// Independent oracle: psi_n(x) = exp(-x^2/2) H_n(x) / sqrt(2^n n! sqrt(pi))
// evaluated from exact integer H_n coefficients in 256-bit MPFR.
double psi_reference(int n, double x) {
  // H_n coefficients by the integer recurrence H_{k+1} = 2x H_k - 2k H_{k-1}.
  std::vector<std::vector<mpz_class>> h(static_cast<std::size_t>(n) + 1);
  h[0] = {1};
  if (n >= 1) h[1] = {0, 2};
  for (int k = 1; k < n; ++k) {
    std::vector<mpz_class> next(static_cast<std::size_t>(k) + 2);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2 * h[k][j];
    for (std::size_t j = 0; j < h[k - 1].size(); ++j)
      next[j] -= 2 * k * h[k - 1][j];
    h[k + 1] = std::move(next);
  }

  constexpr mpfr_prec_t prec = 256;
  mpfr_t acc, xm, term, tmp;
  mpfr_inits2(prec, acc, xm, term, tmp, nullptr);
  mpfr_set_d(xm, x, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  // Horner
  for (int j = n; j >= 0; --j) {
    mpfr_mul(acc, acc, xm, MPFR_RNDN);
    mpfr_set_z(tmp, h[n][j].get_mpz_t(), MPFR_RNDN);
    mpfr_add(acc, acc, tmp, MPFR_RNDN);
  }
  // * exp(-x^2/2)
  mpfr_mul(tmp, xm, xm, MPFR_RNDN);
  mpfr_div_ui(tmp, tmp, 2, MPFR_RNDN);
  mpfr_neg(tmp, tmp, MPFR_RNDN);
  mpfr_exp(tmp, tmp, MPFR_RNDN);
  mpfr_mul(acc, acc, tmp, MPFR_RNDN);
  // / sqrt(2^n n! sqrt(pi))
  mpfr_const_pi(tmp, MPFR_RNDN);
  mpfr_sqrt(tmp, tmp, MPFR_RNDN);
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  f <<= n;  // 2^n n!
  mpfr_set_z(term, f.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(tmp, tmp, term, MPFR_RNDN);
  mpfr_sqrt(tmp, tmp, MPFR_RNDN);
  mpfr_div(acc, acc, tmp, MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, xm, term, tmp, nullptr);
  return out;
}

}  // namespace

TEST_CASE("eval_psi ground and first excited values") {
  CHECK(eval_psi(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(eval_psi(1, 0.0) == 0.0);
  // (4*1^2 - 2) e^{-1/2} / sqrt(2^2 2! sqrt(pi)), frozen from the oracle
  CHECK(eval_psi(2, 1.0) ==
        doctest::Approx(0.3221441825567376).epsilon(1e-14));
}

TEST_CASE("eval_psi matches the definition to high precision") {
  for (int n = 0; n <= 12; ++n)
    for (double x : {-3.0, -1.27, 0.0, 0.4, 1.0, 2.9}) {
      const double ref = psi_reference(n, x);
      if (ref == 0.0) {
        CHECK(std::abs(eval_psi(n, x)) < 1e-14);
      } else {
        CHECK(eval_psi(n, x) == doctest::Approx(ref).epsilon(1e-12));
      }
    }
}

TEST_CASE("eval_psi_all is bit-identical to per-index eval_psi") {
  const auto all = eval_psi_all(64, 0.7);
  REQUIRE(all.size() == 65);
  for (int k = 0; k <= 64; ++k) CHECK(all[k] == eval_psi(k, 0.7));

  const auto one = eval_psi_all(1, 0.0);
  CHECK(one[0] == doctest::Approx(0.7511255444649425));
  CHECK(one[1] == 0.0);
  CHECK(eval_psi_all(0, 3.0)[0] == eval_psi(0, 3.0));
}

TEST_CASE("eval_psi has no overflow for large n") {
  CHECK(std::isfinite(eval_psi(10000, 50.0)));
  CHECK(std::isfinite(eval_psi(10000, 0.1)));
  CHECK(std::isfinite(eval_psi(1000, -37.0)));
}

TEST_CASE("generalized family") {
  CHECK(eval_psi_general(0, {0.0, 1.0}, 0.0) ==
        doctest::Approx(0.7511255444649425));
  CHECK(eval_psi_general(0, {2.0, 1.0}, 2.0) ==
        doctest::Approx(0.7511255444649425));
  // (1/sqrt(2)) psi_3(-1/2), frozen from the oracle
  CHECK(eval_psi_general(3, {1.0, 2.0}, 0.0) ==
        doctest::Approx(0.33826737200852332).epsilon(1e-14));
  CHECK_THROWS_AS(eval_psi_general(0, {0.0, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_psi_general(0, {0.0, -1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("scale covariance is exact on power-of-two scales") {
  for (double s : {0.25, 1.0, 4.0, 16.0})
    for (int n : {0, 3, 11})
      for (double x : {-2.0, 0.3, 1.7}) {
        const FrameParams fr{0.6, s};
        CHECK(eval_psi_general(n, fr, x) * std::sqrt(s) ==
              eval_psi(n, (x - 0.6) / s));
      }
}

TEST_CASE("psi_prime against central differences") {
  CHECK(psi_prime(0, 0.0) == 0.0);
  // frozen: sqrt(1/2) psi_0(0) - psi_2(0)
  CHECK(psi_prime(1, 0.0) == doctest::Approx(1.0622519320271969).epsilon(1e-14));
  // frozen finite-difference target for psi_5 at 1.3
  CHECK(psi_prime(5, 1.3) == doctest::Approx(-0.7003407201993281).epsilon(1e-12));

  const double h = 1e-5;
  for (int n = 0; n <= 40; n += 5)
    for (double x = -6.0; x <= 6.0; x += 0.75) {
      const double fd = (eval_psi(n, x + h) - eval_psi(n, x - h)) / (2 * h);
      CHECK(std::abs(psi_prime(n, x) - fd) < 1e-7);
    }
}

TEST_CASE("gauss_hermite small closed forms") {
  const QuadratureRule r1 = gauss_hermite(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.mod_weights[0] ==
        doctest::Approx(1.7724538509055160).epsilon(1e-14));  // sqrt(pi)

  const QuadratureRule r2 = gauss_hermite(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2.nodes[0] == doctest::Approx(-0.7071067811865476).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(0.7071067811865476).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite(1025), std::invalid_argument);
}

TEST_CASE("rule exactness for Hermite products") {
  const QuadratureRule rule = gauss_hermite(40);
  double worst = 0.0;
  std::vector<std::vector<double>> psi_at;
  for (double x : rule.nodes) psi_at.push_back(eval_psi_all(39, x));
  for (int n = 0; n <= 39; ++n)
    for (int m = n; m <= 39 && n + m <= 78; ++m) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.mod_weights[i] * psi_at[i][n] * psi_at[i][m];
      worst = std::max(worst, std::abs(acc - (n == m ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-13);
}

TEST_CASE("node symmetry and positive weights") {
  for (int M : {1, 2, 7, 40, 81, 128}) {
    const QuadratureRule rule = gauss_hermite(M);
    REQUIRE(rule.size() == static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
      CHECK(rule.nodes[i] == -rule.nodes[M - 1 - i]);
      CHECK(rule.mod_weights[i] > 0.0);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
  }
}

TEST_CASE("integrate basics") {
  const QuadratureRule rule = gauss_hermite(8);
  auto sample_product = [&](int n, int m) {
    std::vector<double> g;
    for (double x : rule.nodes) g.push_back(eval_psi(n, x) * eval_psi(m, x));
    return integrate(g, rule);
  };
  CHECK(sample_product(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(sample_product(0, 1)) < 1e-14);

  std::vector<double> g;
  for (double x : rule.nodes) {
    const double p = eval_psi(0, x);
    g.push_back(x * x * p * p);
  }
  CHECK(integrate(g, rule) == doctest::Approx(0.5).epsilon(1e-14));

  const std::vector<double> short_samples(3, 0.0);
  CHECK_THROWS_AS(integrate(short_samples, rule), std::invalid_argument);
}

TEST_CASE("orthonormality at scale") {
  const QuadratureRule rule = gauss_hermite(66);
  std::vector<std::vector<double>> psi_at;
  for (double x : rule.nodes) psi_at.push_back(eval_psi_all(64, x));
  double worst = 0.0;
  for (int n = 0; n <= 64; n += 4)
    for (int m = n; m <= 64; m += 3) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.mod_weights[i] * psi_at[i][n] * psi_at[i][m];
      worst = std::max(worst, std::abs(acc - (n == m ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("second and kinetic moment laws") {
  for (double s : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 32; n += 4) {
      const QuadratureRule rule = gauss_hermite(n + 8);
      const FrameParams fr{-0.3, s};
      double x2 = 0.0;
      double kin = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes[i];
        const double x = fr.x0 + s * u;
        const double v = eval_psi_general(n, fr, x);
        x2 += rule.mod_weights[i] * (x - fr.x0) * (x - fr.x0) * v * v;
        const auto psi = eval_psi_all(n + 2, u);
        double dd = -(n + 0.5) * psi[n] +
                    0.5 * std::sqrt((n + 1.0) * (n + 2.0)) * psi[n + 2];
        if (n >= 2) dd += 0.5 * std::sqrt(n * (n - 1.0)) * psi[n - 2];
        kin += rule.mod_weights[i] * psi[n] * dd;
      }
      x2 *= s;  // Jacobian
      kin /= s * s;
      CHECK(std::abs(x2 - (n + 0.5) * s * s) < 1e-10);
      CHECK(std::abs(kin + (n + 0.5) / (s * s)) < 1e-10);
    }
}
