#pragma once

#include <vector>

namespace io2 {

/// Center/scale frame for the generalized Hermite family
/// psi[n, x0, s, x] = psi_n((x - x0)/s) / sqrt(s).
struct FrameParams {
  double x0 = 0.0;
  double s = 1.0;
};

/// Gauss-Hermite rule with modified weights: integrates g(x) dx directly
/// (no weight factor at the call site) exactly for g = p(x) * exp(-x^2)
/// with deg p <= 2M - 1. Nodes are the roots of psi_M, symmetric about 0.
struct QuadratureRule {
  std::vector<double> nodes;        // strictly increasing
  std::vector<double> mod_weights;  // all positive
  std::size_t size() const { return nodes.size(); }
};

/// psi_n(x) = exp(-x^2/2) H_n(x) / sqrt(2^n n! sqrt(pi)) by the normalized
/// three-term recurrence. Total function; underflows to 0 far outside the
/// classically allowed region instead of switching to a log scale.
double eval_psi(int n, double x);

/// All of psi_0(x) .. psi_{n_max}(x) in one recurrence pass. Element k is
/// bit-identical to eval_psi(k, x).
std::vector<double> eval_psi_all(int n_max, double x);

/// psi[n, x0, s, x]; rejects s <= 0.
double eval_psi_general(int n, const FrameParams& frame, double x);

/// psi_n'(x) = sqrt(n/2) psi_{n-1}(x) - sqrt((n+1)/2) psi_{n+1}(x).
double psi_prime(int n, double x);

/// Rule with M nodes (1 <= M <= 1024): roots of psi_M by interlacing-seeded
/// bisection plus Newton polish, weights 1 / sum_{k<M} psi_k(x_i)^2.
QuadratureRule gauss_hermite(int M);

/// Sum of mod_weights[i] * samples[i]; rejects a length mismatch.
double integrate(const std::vector<double>& samples_at_nodes,
                 const QuadratureRule& rule);

}  // namespace io2
