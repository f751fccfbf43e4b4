#include "io2/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace io2 {

namespace {

const double kTwoPiQuarter = std::pow(2.0 * std::numbers::pi, 0.25);
const double kTwoPiQuarterInv = 1.0 / kTwoPiQuarter;
const double kSqrtTwoPi = std::sqrt(2.0 * std::numbers::pi);

// i^n mod 4, as the (-i)^n twist is just the conjugate direction.
inline std::complex<double> i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::vector<std::complex<double>> FunctionSpec::sample(
    const QuadratureRule& rule) const {
  if (std::holds_alternative<Fn>(body_)) {
    const Fn& f = std::get<Fn>(body_);
    std::vector<std::complex<double>> out;
    out.reserve(rule.size());
    for (double x : rule.nodes) out.push_back(f(x));
    return out;
  }
  const auto& s = std::get<std::vector<std::complex<double>>>(body_);
  if (s.size() != rule.size())
    throw std::invalid_argument(
        "FunctionSpec: sample count does not match the quadrature rule");
  return s;
}

CoeffVector analyze(const FunctionSpec& f, int n_max,
                    const QuadratureRule& rule) {
  if (n_max < 0) throw std::invalid_argument("analyze: n_max must be >= 0");
  if (rule.size() < static_cast<std::size_t>(n_max) + 1)
    throw std::invalid_argument("analyze: insufficient quadrature order");
  const auto g = f.sample(rule);

  CoeffVector out;
  out.coeffs.assign(static_cast<std::size_t>(n_max), {0.0, 0.0});
  if (n_max == 0) return out;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto psi = eval_psi_all(n_max - 1, rule.nodes[i]);
    const std::complex<double> wg = rule.mod_weights[i] * g[i];
    for (int n = 0; n < n_max; ++n) out.coeffs[n] += psi[n] * wg;
  }
  for (auto& c : out.coeffs) c *= kTwoPiQuarterInv;
  return out;
}

std::vector<std::complex<double>> synthesize_x(const CoeffVector& c,
                                               const std::vector<double>& xs) {
  std::vector<std::complex<double>> out;
  out.reserve(xs.size());
  const int n_top = static_cast<int>(c.size()) - 1;
  for (double x : xs) {
    std::complex<double> acc{0.0, 0.0};
    if (n_top >= 0) {
      const auto psi = eval_psi_all(n_top, x);
      for (int n = 0; n <= n_top; ++n) acc += psi[n] * c.coeffs[n];
    }
    out.push_back(kTwoPiQuarter * acc);
  }
  return out;
}

std::vector<std::complex<double>> synthesize_p(const CoeffVector& c,
                                               const std::vector<double>& ps) {
  std::vector<std::complex<double>> out;
  out.reserve(ps.size());
  const int n_top = static_cast<int>(c.size()) - 1;
  for (double p : ps) {
    std::complex<double> acc{0.0, 0.0};
    if (n_top >= 0) {
      const auto psi = eval_psi_all(n_top, p);
      for (int n = 0; n <= n_top; ++n) acc += i_pow(n) * psi[n] * c.coeffs[n];
    }
    out.push_back(kTwoPiQuarter * acc);
  }
  return out;
}

std::vector<std::complex<double>> fourier_num(const FunctionSpec& f,
                                              const QuadratureRule& rule,
                                              const std::vector<double>& ps) {
  const auto g = f.sample(rule);
  std::vector<std::complex<double>> out;
  out.reserve(ps.size());
  for (double p : ps) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double phase = p * rule.nodes[i];
      acc += rule.mod_weights[i] * g[i] *
             std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    out.push_back(acc / kSqrtTwoPi);
  }
  return out;
}

std::vector<std::complex<double>> translate_phase(
    const std::vector<std::complex<double>>& fp, const std::vector<double>& ps,
    double x0) {
  if (fp.size() != ps.size())
    throw std::invalid_argument("translate_phase: profile/grid length mismatch");
  std::vector<std::complex<double>> out;
  out.reserve(fp.size());
  for (std::size_t k = 0; k < fp.size(); ++k) {
    const double phase = -ps[k] * x0;
    out.push_back(fp[k] *
                  std::complex<double>{std::cos(phase), std::sin(phase)});
  }
  return out;
}

double completeness_kernel(int N, double x, double xprime) {
  if (N < 1) throw std::invalid_argument("completeness_kernel: N must be >= 1");
  const auto px = eval_psi_all(N - 1, x);
  const auto py = eval_psi_all(N - 1, xprime);
  double acc = 0.0;
  for (int n = 0; n < N; ++n) acc += px[n] * py[n];
  return acc;
}

double parseval_ratio(const FunctionSpec& f, int n_max,
                      const QuadratureRule& rule) {
  const auto g = f.sample(rule);
  double l2 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    l2 += rule.mod_weights[i] * std::norm(g[i]);
  const CoeffVector c = analyze(f, n_max, rule);
  const double s2 = c.norm2();
  if (s2 == 0.0) throw std::invalid_argument("parseval_ratio: zero function");
  return l2 / s2;
}

}  // namespace io2
