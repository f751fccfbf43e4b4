#include "io2/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "io2/algebra.hpp"
#include "io2/hermite.hpp"
#include "io2/rep.hpp"
#include "io2/transforms.hpp"

namespace io2::verify {

namespace {

std::string fmt_err(double err, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "max err " << err << " (tol " << tol << ")";
  return os.str();
}

CheckResult bounded(const std::string& name, double err, double tol) {
  return {name, err <= tol, fmt_err(err, tol)};
}

CheckResult exact(const std::string& name, bool ok, const std::string& what) {
  return {name, ok, what};
}

// Deterministic random elements with small exact coefficients.
class ElementGen {
 public:
  explicit ElementGen(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    int n = num(rng_);
    if (n == 0) n = 1;
    const Scalar r = Scalar(mpq_class(n, den(rng_)));
    switch (kind(rng_)) {
      case 0: return r;
      case 1: return r * Scalar::i();
      case 2: return r * Scalar::sqrt2();
      default: return r * Scalar::i() * Scalar::sqrt2();
    }
  }

  UEAElement element(Basis basis, unsigned max_deg, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    UEAElement out(basis);
    const int k = nterms(rng_);
    for (int t = 0; t < k; ++t) {
      const unsigned d = deg(rng_);
      Expo e{0, 0, 0};
      std::uniform_int_distribution<int> slot(0, 2);
      for (unsigned j = 0; j < d; ++j) ++e[slot(rng_)];
      out.add_term(e, scalar());
    }
    return out;
  }

  std::complex<double> cplx() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng_), u(rng_)};
  }

 private:
  std::mt19937_64 rng_;
};

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    m = std::max(m, std::abs(a.entries[k] - b.entries[k]));
  return m;
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out;
  out.dim = a.dim;
  out.entries.assign(a.entries.size(), {0.0, 0.0});
  for (int m = 0; m < a.dim; ++m)
    for (int k = 0; k < a.dim; ++k) {
      const std::complex<double> amk = a.at(m, k);
      if (amk == std::complex<double>{0.0, 0.0}) continue;
      for (int n = 0; n < a.dim; ++n) out.at(m, n) += amk * b.at(k, n);
    }
  return out;
}

// ----- hermite ----------------------------------------------------------

std::vector<CheckResult> suite_hermite() {
  std::vector<CheckResult> out;

  {
    const auto rule = gauss_hermite(80);
    const int top = 64;
    std::vector<std::vector<double>> gram(top + 1,
                                          std::vector<double>(top + 1, 0.0));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const auto psi = eval_psi_all(top, rule.nodes[i]);
      for (int n = 0; n <= top; ++n)
        for (int m = n; m <= top; ++m)
          gram[n][m] += rule.mod_weights[i] * psi[n] * psi[m];
    }
    double err = 0.0;
    for (int n = 0; n <= top; ++n)
      for (int m = n; m <= top; ++m)
        err = std::max(err, std::abs(gram[n][m] - (n == m ? 1.0 : 0.0)));
    out.push_back(bounded("hermite.orthonormality", err, 1e-12));
  }

  {
    double err = 0.0;
    const double h = 1e-5;
    for (int n = 0; n <= 40; ++n)
      for (double x = -6.0; x <= 6.0; x += 0.5) {
        const double fd = (eval_psi(n, x + h) - eval_psi(n, x - h)) / (2 * h);
        err = std::max(err, std::abs(psi_prime(n, x) - fd));
      }
    out.push_back(bounded("hermite.derivative_fd", err, 1e-7));
  }

  {
    double err = 0.0;
    const double x0 = 0.7;
    for (double s : {0.5, 1.0, 2.0}) {
      const FrameParams frame{x0, s};
      for (int n = 0; n <= 32; ++n) {
        const auto rule = gauss_hermite(n + 8);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          const double x = x0 + s * rule.nodes[i];
          const double v = eval_psi_general(n, frame, x);
          acc += rule.mod_weights[i] * (x - x0) * (x - x0) * v * v;
        }
        acc *= s;  // Jacobian of the node map
        err = std::max(err, std::abs(acc - (n + 0.5) * s * s));
      }
    }
    out.push_back(bounded("hermite.second_moment", err, 1e-10));
  }

  {
    double err = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
      for (int n = 0; n <= 32; ++n) {
        const auto rule = gauss_hermite(n + 8);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          const double u = rule.nodes[i];
          const auto psi = eval_psi_all(n + 2, u);
          double dd = -(n + 0.5) * psi[n] +
                      0.5 * std::sqrt((n + 1.0) * (n + 2.0)) * psi[n + 2];
          if (n >= 2) dd += 0.5 * std::sqrt(n * (n - 1.0)) * psi[n - 2];
          acc += rule.mod_weights[i] * psi[n] * dd;
        }
        acc /= s * s;
        err = std::max(err, std::abs(acc + (n + 0.5) / (s * s)));
      }
    }
    out.push_back(bounded("hermite.kinetic_moment", err, 1e-10));
  }

  {
    bool ok = true;
    for (double s : {0.25, 1.0, 4.0})
      for (int n : {0, 1, 5, 17})
        for (double x = -3.0; x <= 3.0; x += 0.37) {
          const FrameParams frame{0.4, s};
          const double lhs = eval_psi_general(n, frame, x) * std::sqrt(s);
          const double rhs = eval_psi(n, (x - 0.4) / s);
          if (lhs != rhs) ok = false;
        }
    out.push_back(exact("hermite.scale_covariance", ok,
                        ok ? "bit-exact on power-of-two scales" : "mismatch"));
  }

  {
    const auto rule = gauss_hermite(40);
    double err = 0.0;
    const int top = 39;
    std::vector<std::vector<double>> gram(top + 1,
                                          std::vector<double>(top + 1, 0.0));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const auto psi = eval_psi_all(top, rule.nodes[i]);
      for (int n = 0; n <= top; ++n)
        for (int m = n; m <= top; ++m)
          gram[n][m] += rule.mod_weights[i] * psi[n] * psi[m];
    }
    for (int n = 0; n <= top; ++n)
      for (int m = n; m <= top && n + m <= 78; ++m)
        err = std::max(err, std::abs(gram[n][m] - (n == m ? 1.0 : 0.0)));
    out.push_back(bounded("hermite.quad_exactness", err, 1e-13));
  }

  {
    bool ok = true;
    std::string what = "nodes mirror exactly, weights positive";
    for (int M : {1, 2, 8, 41, 80}) {
      const auto rule = gauss_hermite(M);
      if (rule.nodes.size() != static_cast<std::size_t>(M)) ok = false;
      for (int i = 0; i < M; ++i) {
        if (rule.nodes[i] != -rule.nodes[M - 1 - i]) ok = false;
        if (!(rule.mod_weights[i] > 0.0)) ok = false;
        if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])) ok = false;
      }
    }
    out.push_back(exact("hermite.node_symmetry", ok,
                        ok ? what : "symmetry/positivity violated"));
  }

  return out;
}

// ----- algebra ----------------------------------------------------------

std::vector<CheckResult> suite_algebra() {
  std::vector<CheckResult> out;

  {
    ElementGen gen(0x5eed0001);
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) {
      const Basis basis = (t % 2 == 0) ? Basis::Differential : Basis::Ladder;
      const UEAElement a = gen.element(basis, 5);
      const UEAElement b = gen.element(basis, 5);
      const UEAElement c = gen.element(basis, 5);
      if (product(product(a, b), c) != product(a, product(b, c))) ok = false;
    }
    out.push_back(exact("algebra.pbw_determinism", ok,
                        ok ? "500 random association pairs agree exactly"
                           : "association order changed the canonical form"));
  }

  {
    ElementGen gen(0x5eed0002);
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const UEAElement a = gen.element(Basis::Differential, 5);
      if (from_ladder(to_ladder(a)) != a) ok = false;
      const UEAElement l = gen.element(Basis::Ladder, 5);
      if (to_ladder(from_ladder(l)) != l) ok = false;
    }
    out.push_back(exact("algebra.basis_roundtrip", ok,
                        ok ? "200 random round trips are exact"
                           : "round trip moved an element"));
  }

  {
    bool ok = true;
    const UEAElement c = casimir();
    for (unsigned a = 0; a <= 4 && ok; ++a)
      for (unsigned b = 0; a + b <= 4 && ok; ++b)
        for (unsigned g = 0; a + b + g <= 4 && ok; ++g) {
          const UEAElement m = UEAElement::monomial(Basis::Differential,
                                                    {a, b, g}, Scalar(1));
          if (!commutator(c, m).is_zero()) ok = false;
        }
    out.push_back(exact("algebra.centrality", ok,
                        ok ? "[C, m] = 0 for every monomial of degree <= 4"
                           : "Casimir failed to commute"));
  }

  {
    ElementGen gen(0x5eed0003);
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const UEAElement a = gen.element(Basis::Differential, 4);
      if (casimir_reduce(a).max_d_power() > 1) ok = false;
    }
    out.push_back(exact("algebra.reduce_shape", ok,
                        ok ? "every reduced form has D power <= 1"
                           : "reduction left a D^2"));
  }

  {
    ElementGen gen(0x5eed0004);
    bool ok = true;
    double ferr = 0.0;
    for (int t = 0; t < 100 && ok; ++t) {
      const UEAElement a = gen.element(Basis::Differential, 4);
      const UEAElement r = casimir_reduce(a);
      const ExactMatrix ma = compile_exact(a, 12);
      const ExactMatrix mr = compile_exact(r, 12);
      if (!(ma == mr)) ok = false;
      ferr = std::max(ferr, max_abs_diff(ma.to_complex(), mr.to_complex()));
    }
    out.push_back(exact(
        "algebra.reduce_soundness", ok && ferr <= 1e-10,
        ok ? fmt_err(ferr, 1e-10) : "exact matrix mismatch after reduction"));
  }

  {
    const UEAElement c = casimir();
    bool ok = to_string(c) == "(1/2)*X^2 - (1/2)*D^2 - N - (1/2)*I";
    UEAElement ladder_expected(Basis::Ladder);
    ladder_expected.add_term({1, 0, 1}, Scalar(1));
    ladder_expected.add_term({0, 1, 0}, Scalar(-1));
    if (to_ladder(c) != ladder_expected) ok = false;
    for (Gen g : {Gen::X, Gen::D, Gen::N, Gen::Id})
      if (!commutator(c, UEAElement::generator(g)).is_zero()) ok = false;
    out.push_back(exact("algebra.casimir_forms", ok,
                        ok ? "canonical, ladder form ad*a - N, central"
                           : "Casimir form mismatch"));
  }

  {
    ElementGen gen(0x5eed0005);
    bool ok = true;
    std::uint64_t max_used = 0;
    try {
      for (int t = 0; t < 20; ++t) {
        RewriteBudgetScope scope(1'000'000);
        UEAElement a = gen.element(Basis::Differential, 8, 5);
        a.add_term({0, 8, 0}, Scalar(1));  // force a deep D power
        const UEAElement r = casimir_reduce(a);
        if (r.max_d_power() > 1) ok = false;
        max_used = std::max(max_used, scope.used());
      }
    } catch (const std::runtime_error&) {
      ok = false;
    }
    std::ostringstream os;
    os << "max " << max_used << " rule applications (budget 1000000)";
    out.push_back(exact("algebra.termination_budget", ok, os.str()));
  }

  return out;
}

// ----- rep --------------------------------------------------------------

std::vector<CheckResult> suite_rep() {
  std::vector<CheckResult> out;
  const UEAElement P =
      UEAElement::generator(Gen::D).scaled(-Scalar::i());  // alias -i D

  {
    bool ok = true;
    for (int d : {8, 24}) {
      const ExactMatrix x = compile_exact(UEAElement::generator(Gen::X), d, 0);
      const ExactMatrix p = compile_exact(P, d, 0);
      for (int m = 0; m < d && ok; ++m)
        for (int n = 0; n < d && ok; ++n) {
          if (!(x.coeff(m, n) == x.coeff(n, m).conj_i())) ok = false;
          if (!(p.coeff(m, n) == p.coeff(n, m).conj_i())) ok = false;
        }
      const ExactMatrix ad = generator_matrix_exact(Gen::ADag, d);
      const ExactMatrix a = generator_matrix_exact(Gen::A, d);
      for (int m = 0; m < d && ok; ++m)
        for (int n = 0; n < d && ok; ++n)
          if (!(ad.coeff(m, n) == a.coeff(n, m).conj_i())) ok = false;
    }
    out.push_back(exact("rep.hermiticity", ok,
                        ok ? "X, P hermitian; ad is the exact adjoint of a"
                           : "hermiticity violated"));
  }

  {
    const int d = 16;
    const OperatorMatrix x = compile(UEAElement::generator(Gen::X), d, 0);
    const OperatorMatrix p = compile(P, d, 0);
    const OperatorMatrix xp = matmul(x, p);
    const OperatorMatrix px = matmul(p, x);
    double err = 0.0;
    for (int m = 0; m < d - 2; ++m)
      for (int n = 0; n < d - 2; ++n) {
        const std::complex<double> want =
            (m == n) ? std::complex<double>{0.0, 1.0}
                     : std::complex<double>{0.0, 0.0};
        err = std::max(err, std::abs(xp.at(m, n) - px.at(m, n) - want));
      }
    out.push_back(bounded("rep.commutation_interior", err, 1e-13));
  }

  {
    const bool ok = compile_exact(casimir(), 32).is_zero();
    out.push_back(exact("rep.casimir_compile_zero", ok,
                        ok ? "32x32 block is exactly zero"
                           : "nonzero exact entry"));
  }

  {
    bool ok = true;
    for (int n = 0; n < 30; ++n) {
      const CoeffVector e = CoeffVector::basis_state(n, 32);
      const CoeffVector r = apply(casimir(), e);
      for (const auto& z : r.coeffs)
        if (z != std::complex<double>{0.0, 0.0}) ok = false;
    }
    out.push_back(exact("rep.casimir_annihilation", ok,
                        ok ? "C e_n = 0 exactly for n < 30"
                           : "nonzero coefficient"));
  }

  {
    double err = 0.0;
    for (double s : {0.5, 1.0, 2.0})
      for (int n = 0; n <= 32; ++n) {
        const Uncertainty u = uncertainty_product(n, s);
        err = std::max(err, std::abs(u.product - (n + 0.5)));
      }
    out.push_back(bounded("rep.uncertainty", err, 1e-10));
  }

  {
    ElementGen gen(0x5eed0006);
    bool ok = true;
    for (int t = 0; t < 50 && ok; ++t) {
      const Basis basis = (t % 2 == 0) ? Basis::Differential : Basis::Ladder;
      const UEAElement a = gen.element(basis, 4);
      const int deg = static_cast<int>(a.degree());
      const ExactMatrix m = compile_exact(a, 12);
      for (int r = 0; r < 12 && ok; ++r)
        for (int c = 0; c < 12 && ok; ++c)
          if (std::abs(r - c) > deg && !m.coeff(r, c).is_zero()) ok = false;
    }
    out.push_back(exact("rep.bandwidth", ok,
                        ok ? "bandwidth bounded by the total degree"
                           : "entry outside the band"));
  }

  {
    // X against quadrature matrix elements of multiplication by x.
    const int d = 8;
    const OperatorMatrix x = generator_matrix(Gen::X, d);
    const auto rule = gauss_hermite(16);
    double err = 0.0;
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          const auto psi = eval_psi_all(d, rule.nodes[i]);
          acc += rule.mod_weights[i] * psi[m] * rule.nodes[i] * psi[n];
        }
        err = std::max(err, std::abs(x.at(m, n) - acc));
      }
    out.push_back(bounded("rep.position_matrix_quadrature", err, 1e-13));
  }

  return out;
}

// ----- transforms -------------------------------------------------------

std::vector<CheckResult> suite_transforms() {
  std::vector<CheckResult> out;
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  const double two_pi_quarter = std::pow(2.0 * std::numbers::pi, 0.25);

  {
    ElementGen gen(0x5eed0007);
    const auto rule = gauss_hermite(40);
    CoeffVector c;
    for (int n = 0; n < 32; ++n) c.coeffs.push_back(gen.cplx());
    const auto g = synthesize_x(c, rule.nodes);
    const CoeffVector back =
        analyze(FunctionSpec::from_samples(g), 32, rule);
    double err = 0.0;
    for (int n = 0; n < 32; ++n)
      err = std::max(err, std::abs(back.coeffs[n] - c.coeffs[n]));
    out.push_back(bounded("transforms.roundtrip", err, 1e-12));
  }

  {
    const auto rule = gauss_hermite(96);
    std::vector<double> ps;
    for (double p = -6.0; p <= 6.0 + 1e-12; p += 0.25) ps.push_back(p);
    double err = 0.0;
    for (int n = 0; n <= 32; ++n) {
      const auto got = fourier_num(
          FunctionSpec::from_function(
              [n](double x) { return std::complex<double>{eval_psi(n, x), 0.0}; }),
          rule, ps);
      const std::complex<double> in = [n] {
        switch (n % 4) {
          case 0: return std::complex<double>{1.0, 0.0};
          case 1: return std::complex<double>{0.0, 1.0};
          case 2: return std::complex<double>{-1.0, 0.0};
          default: return std::complex<double>{0.0, -1.0};
        }
      }();
      for (std::size_t k = 0; k < ps.size(); ++k)
        err = std::max(err, std::abs(got[k] - in * eval_psi(n, ps[k])));
    }
    out.push_back(bounded("transforms.fourier_eigen", err, 1e-8));
  }

  {
    ElementGen gen(0x5eed0008);
    const auto rule = gauss_hermite(96);
    CoeffVector c;
    for (int n = 0; n < 16; ++n) c.coeffs.push_back(gen.cplx());
    std::vector<double> ps;
    for (double p = -6.0; p <= 6.0 + 1e-12; p += 0.25) ps.push_back(p);
    const auto via_x = fourier_num(
        FunctionSpec::from_samples(synthesize_x(c, rule.nodes)), rule, ps);
    const auto direct = synthesize_p(c, ps);
    double err = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k)
      err = std::max(err, std::abs(via_x[k] - direct[k]));
    out.push_back(bounded("transforms.phase_coherence", err, 1e-8));
  }

  {
    const auto rule = gauss_hermite(40);
    double err = 0.0;
    for (int m = 0; m < 32; ++m)
      for (double x : {-4.0, -2.5, -1.0, 0.0, 0.6, 1.9, 3.3, 5.0}) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
          acc += rule.mod_weights[i] * completeness_kernel(32, x, rule.nodes[i]) *
                 eval_psi(m, rule.nodes[i]);
        err = std::max(err, std::abs(acc - eval_psi(m, x)));
      }
    out.push_back(bounded("transforms.kernel_reproduction", err, 1e-12));
  }

  {
    const auto rule = gauss_hermite(48);
    double err = 0.0;
    const auto ratio_err = [&](const FunctionSpec& f, int n_max) {
      return std::abs(parseval_ratio(f, n_max, rule) - sqrt_2pi);
    };
    err = std::max(err, ratio_err(FunctionSpec::from_function([&](double x) {
                     return std::complex<double>{two_pi_quarter * eval_psi(0, x),
                                                 0.0};
                   }),
                   8));
    err = std::max(err, ratio_err(FunctionSpec::from_function([&](double x) {
                     return std::complex<double>{
                         two_pi_quarter *
                             (eval_psi(0, x) + eval_psi(5, x)) / std::sqrt(2.0),
                         0.0};
                   }),
                   8));
    ElementGen gen(0x5eed0009);
    CoeffVector c;
    for (int n = 0; n < 12; ++n) c.coeffs.push_back(gen.cplx());
    err = std::max(err, ratio_err(FunctionSpec::from_samples(
                                      synthesize_x(c, rule.nodes)),
                                  12));
    out.push_back(bounded("transforms.parseval", err, 1e-10));
  }

  {
    const auto rule = gauss_hermite(96);
    std::vector<double> ps;
    for (double p = -5.0; p <= 5.0 + 1e-12; p += 0.5) ps.push_back(p);
    const auto base = fourier_num(
        FunctionSpec::from_function(
            [](double x) { return std::complex<double>{eval_psi(0, x), 0.0}; }),
        rule, ps);
    const auto round =
        translate_phase(translate_phase(base, ps, 0.7), ps, -0.7);
    double err = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k)
      err = std::max(err, std::abs(round[k] - base[k]));
    // shift theorem in the +ipx convention: multiplying the momentum
    // profile by e^{-i p x0} is the transform of f(x + x0)
    const double x0 = 0.8;
    const auto shifted = fourier_num(
        FunctionSpec::from_function([x0](double x) {
          return std::complex<double>{eval_psi(0, x + x0), 0.0};
        }),
        rule, ps);
    const auto moved = translate_phase(base, ps, x0);
    for (std::size_t k = 0; k < ps.size(); ++k)
      err = std::max(err, std::abs(moved[k] - shifted[k]));
    out.push_back(bounded("transforms.translate_phase", err, 1e-8));
  }

  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool matched = false;
  auto extend = [&out](std::vector<CheckResult> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (all || suite == "hermite") {
    extend(suite_hermite());
    matched = true;
  }
  if (all || suite == "algebra") {
    extend(suite_algebra());
    matched = true;
  }
  if (all || suite == "rep") {
    extend(suite_rep());
    matched = true;
  }
  if (all || suite == "transforms") {
    extend(suite_transforms());
    matched = true;
  }
  if (!matched)
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected all, hermite, algebra, rep or "
                                "transforms)");
  return out;
}

}  // namespace io2::verify
