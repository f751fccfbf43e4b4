#pragma once

#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "io2/hermite.hpp"
#include "io2/rep.hpp"

namespace io2 {

/// A function of one real variable, either closed form or already sampled
/// on the nodes of the quadrature rule it will be used with.
class FunctionSpec {
 public:
  using Fn = std::function<std::complex<double>(double)>;

  static FunctionSpec from_function(Fn f) { return FunctionSpec(std::move(f)); }
  static FunctionSpec from_samples(std::vector<std::complex<double>> samples) {
    return FunctionSpec(std::move(samples));
  }

  /// Values at the rule nodes; rejects a sample/node length mismatch.
  std::vector<std::complex<double>> sample(const QuadratureRule& rule) const;

 private:
  explicit FunctionSpec(Fn f) : body_(std::move(f)) {}
  explicit FunctionSpec(std::vector<std::complex<double>> s)
      : body_(std::move(s)) {}
  std::variant<Fn, std::vector<std::complex<double>>> body_;
};

/// f_n = (2 pi)^(-1/4) Integral psi_n(x) f(x) dx for n < n_max, by
/// quadrature. Requires rule size >= n_max + 1; only guaranteed for f in
/// the span resolved by the rule (out-of-band energy aliases).
CoeffVector analyze(const FunctionSpec& f, int n_max,
                    const QuadratureRule& rule);

/// f(x) = (2 pi)^(1/4) sum_n psi_n(x) c_n at the given points.
std::vector<std::complex<double>> synthesize_x(const CoeffVector& c,
                                               const std::vector<double>& xs);

/// Momentum profile at the given points, with the phase twist that makes
/// this the e^{+ipx}-kernel transform of synthesize_x:
/// f(p) = (2 pi)^(1/4) sum_n i^n psi_n(p) c_n.
std::vector<std::complex<double>> synthesize_p(const CoeffVector& c,
                                               const std::vector<double>& ps);

/// (1/sqrt(2 pi)) Integral e^{i p x} f(x) dx by quadrature, for each p.
/// Contract: f decays like a Hermite-function combination.
std::vector<std::complex<double>> fourier_num(const FunctionSpec& f,
                                              const QuadratureRule& rule,
                                              const std::vector<double>& ps);

/// Translation-group action on a momentum profile: pointwise e^{-i p x0}.
std::vector<std::complex<double>> translate_phase(
    const std::vector<std::complex<double>>& fp, const std::vector<double>& ps,
    double x0);

/// K_N(x, x') = sum_{n<N} psi_n(x) psi_n(x'), the truncated delta kernel.
double completeness_kernel(int N, double x, double xprime);

/// (Integral |f|^2 dx) / (sum |f_n|^2); equals sqrt(2 pi) under the
/// bra-ket normalization conventions used throughout. Rejects f = 0.
double parseval_ratio(const FunctionSpec& f, int n_max,
                      const QuadratureRule& rule);

}  // namespace io2
