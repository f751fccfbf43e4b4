#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "io2/algebra.hpp"
#include "io2/hermite.hpp"

namespace io2 {

/// Truncated operator matrix at the float boundary: row-major complex
/// entries, entry (m, n) = <m| A |n>.
struct OperatorMatrix {
  int dim = 0;
  std::vector<std::complex<double>> entries;  // dim * dim, row-major

  std::complex<double> at(int m, int n) const {
    return entries[static_cast<std::size_t>(m) * dim + n];
  }
  std::complex<double>& at(int m, int n) {
    return entries[static_cast<std::size_t>(m) * dim + n];
  }
};

/// Exact truncated operator matrix. Every UEA matrix element lives in
/// Q(i,sqrt2) * sqrt(m! n!), so the entry (m, n) is stored as the exact
/// scalar c with value c * sqrt(m! n!). Sums and products then stay in
/// pure rational arithmetic (products pick up an integer k! per inner
/// index), and "exactly zero" is decidable.
class ExactMatrix {
 public:
  explicit ExactMatrix(int dim = 0)
      : dim_(dim), c_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  const Scalar& coeff(int m, int n) const {
    return c_[static_cast<std::size_t>(m) * dim_ + n];
  }
  Scalar& coeff(int m, int n) {
    return c_[static_cast<std::size_t>(m) * dim_ + n];
  }

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

  /// Float boundary: entries evaluated through GMP floats so the huge
  /// sqrt(m! n!) factor and the tiny rational coefficient meet before
  /// any double rounding.
  OperatorMatrix to_complex() const;

 private:
  int dim_;
  std::vector<Scalar> c_;
};

/// Coefficient vector in the discrete basis, f = sum f_n |n>.
struct CoeffVector {
  std::vector<std::complex<double>> coeffs;
  std::optional<FrameParams> frame;

  std::size_t size() const { return coeffs.size(); }
  double norm2() const;
  static CoeffVector basis_state(int n, std::size_t len);
};

/// dim x dim truncation of the band matrix of a single generator.
ExactMatrix generator_matrix_exact(Gen g, int dim);
OperatorMatrix generator_matrix(Gen g, int dim);

/// Matrix of A on the first dim basis states. Each monomial is applied
/// column by column through the truncated generator matrices at the
/// enlarged dimension dim + guard and the result is cut back to dim x dim,
/// so the reported block carries no truncation artifact for guard >=
/// deg(A). Default guard is deg(A).
ExactMatrix compile_exact(const UEAElement& A, int dim);
ExactMatrix compile_exact(const UEAElement& A, int dim, int guard);
OperatorMatrix compile(const UEAElement& A, int dim);
OperatorMatrix compile(const UEAElement& A, int dim, int guard);

/// A f in coefficient space; output length = input length + deg(A), and
/// every output entry is exact up to the single float conversion.
CoeffVector apply(const UEAElement& A, const CoeffVector& f);

/// <f, A f> / <f, f>; norm independent. Rejects the zero vector.
std::complex<double> expectation(const UEAElement& A, const CoeffVector& f);

struct Uncertainty {
  double dx = 0.0;
  double dp = 0.0;
  double product = 0.0;
};

/// Second-moment widths of psi[n, x0, s, .] by quadrature (x0 drops out).
/// Rejects s <= 0.
Uncertainty uncertainty_product(int n, double s);

}  // namespace io2
