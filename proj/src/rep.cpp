#include "io2/rep.hpp"

#include <cmath>
#include <stdexcept>

namespace io2 {

namespace {

std::vector<mpz_class> factorials(int upto) {
  std::vector<mpz_class> f(static_cast<std::size_t>(upto) + 1);
  f[0] = 1;
  for (int k = 1; k <= upto; ++k) f[k] = f[k - 1] * k;
  return f;
}

// One generator, applied to a coefficient column in the sqrt(m!)-scaled
// normalization. The index algebra is purely integer:
//   X:  v'[m] = (v[m-1] + (m+1) v[m+1]) / sqrt2
//   D:  v'[m] = ((m+1) v[m+1] - v[m-1]) / sqrt2
//   N:  v'[m] = m v[m]
//   ad: v'[m] = v[m-1]
//   a:  v'[m] = (m+1) v[m+1]
// Indices outside [0, K) are dropped, which is exactly the truncation of
// the factor matrices at the guarded dimension K.
void apply_gen_column(Gen g, std::vector<Scalar>& v) {
  const int K = static_cast<int>(v.size());
  const Scalar h = Scalar::inv_sqrt2();
  switch (g) {
    case Gen::N:
      for (int m = 1; m < K; ++m) v[m] = v[m].mul_int(m);
      if (K > 0) v[0] = Scalar();
      return;
    case Gen::Id:
      return;
    case Gen::ADag: {
      for (int m = K - 1; m >= 1; --m) v[m] = v[m - 1];
      v[0] = Scalar();
      return;
    }
    case Gen::A: {
      for (int m = 0; m + 1 < K; ++m) v[m] = v[m + 1].mul_int(m + 1);
      v[K - 1] = Scalar();
      return;
    }
    case Gen::X:
    case Gen::D: {
      std::vector<Scalar> out(v.size());
      for (int m = 0; m < K; ++m) {
        Scalar acc;
        if (m + 1 < K) acc += v[m + 1].mul_int(m + 1);
        if (g == Gen::X) {
          if (m >= 1) acc += v[m - 1];
        } else {
          if (m >= 1) acc -= v[m - 1];
        }
        if (!acc.is_zero()) out[m] = acc * h;
      }
      v = std::move(out);
      return;
    }
  }
}

}  // namespace

bool ExactMatrix::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

OperatorMatrix ExactMatrix::to_complex() const {
  const auto fact = factorials(dim_ > 0 ? dim_ - 1 : 0);
  constexpr mp_bitcnt_t kPrec = 256;
  OperatorMatrix out;
  out.dim = dim_;
  out.entries.assign(static_cast<std::size_t>(dim_) * dim_, {0.0, 0.0});
  for (int m = 0; m < dim_; ++m) {
    for (int n = 0; n < dim_; ++n) {
      const Scalar& c = coeff(m, n);
      if (c.is_zero()) continue;
      mpf_class rad(fact[m] * fact[n], kPrec);
      rad = sqrt(rad);
      const mpf_class re = c.real_mpf(kPrec) * rad;
      const mpf_class im = c.imag_mpf(kPrec) * rad;
      out.at(m, n) = {re.get_d(), im.get_d()};
    }
  }
  return out;
}

double CoeffVector::norm2() const {
  double s = 0.0;
  for (const auto& z : coeffs) s += std::norm(z);
  return s;
}

CoeffVector CoeffVector::basis_state(int n, std::size_t len) {
  CoeffVector v;
  v.coeffs.assign(len, {0.0, 0.0});
  if (n >= 0 && static_cast<std::size_t>(n) < len) v.coeffs[n] = {1.0, 0.0};
  return v;
}

ExactMatrix compile_exact(const UEAElement& A, int dim, int guard) {
  if (dim < 1) throw std::invalid_argument("compile: dim must be >= 1");
  if (guard < 0) throw std::invalid_argument("compile: guard must be >= 0");
  const int K = dim + guard;
  const auto fact = factorials(K - 1);

  const Gen slots_diff[3] = {Gen::X, Gen::D, Gen::N};
  const Gen slots_ladder[3] = {Gen::ADag, Gen::N, Gen::A};
  const Gen* slots =
      A.basis() == Basis::Differential ? slots_diff : slots_ladder;

  ExactMatrix out(dim);
  std::vector<Scalar> col(static_cast<std::size_t>(K));
  for (const auto& [e, coeff] : A.terms()) {
    for (int n = 0; n < dim; ++n) {
      std::fill(col.begin(), col.end(), Scalar());
      col[n] = Scalar(mpq_class(mpz_class(1), fact[n]));
      for (int slot = 2; slot >= 0; --slot)
        for (unsigned rep = 0; rep < e[slot]; ++rep)
          apply_gen_column(slots[slot], col);
      for (int m = 0; m < dim; ++m)
        if (!col[m].is_zero()) out.coeff(m, n) += coeff * col[m];
    }
  }
  return out;
}

ExactMatrix compile_exact(const UEAElement& A, int dim) {
  return compile_exact(A, dim, static_cast<int>(A.degree()));
}

OperatorMatrix compile(const UEAElement& A, int dim, int guard) {
  return compile_exact(A, dim, guard).to_complex();
}

OperatorMatrix compile(const UEAElement& A, int dim) {
  return compile_exact(A, dim).to_complex();
}

ExactMatrix generator_matrix_exact(Gen g, int dim) {
  if (dim < 1) throw std::invalid_argument("generator_matrix: dim must be >= 1");
  Basis basis = Basis::Differential;
  if (g == Gen::ADag || g == Gen::A) basis = Basis::Ladder;
  return compile_exact(UEAElement::generator(g, basis), dim, 0);
}

OperatorMatrix generator_matrix(Gen g, int dim) {
  return generator_matrix_exact(g, dim).to_complex();
}

CoeffVector apply(const UEAElement& A, const CoeffVector& f) {
  const int deg = static_cast<int>(A.degree());
  const int out_len = static_cast<int>(f.size()) + deg;
  CoeffVector out;
  out.frame = f.frame;
  if (out_len == 0) return out;
  const OperatorMatrix M = compile(A, out_len);
  out.coeffs.assign(static_cast<std::size_t>(out_len), {0.0, 0.0});
  for (int m = 0; m < out_len; ++m) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < f.size(); ++n)
      acc += M.at(m, static_cast<int>(n)) * f.coeffs[n];
    out.coeffs[m] = acc;
  }
  return out;
}

std::complex<double> expectation(const UEAElement& A, const CoeffVector& f) {
  const double n2 = f.norm2();
  if (n2 == 0.0) throw std::invalid_argument("expectation: zero vector");
  const CoeffVector Af = apply(A, f);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = 0; n < f.size(); ++n)
    acc += std::conj(f.coeffs[n]) * Af.coeffs[n];
  return acc / n2;
}

Uncertainty uncertainty_product(int n, double s) {
  if (n < 0) throw std::invalid_argument("uncertainty_product: n must be >= 0");
  if (!(s > 0.0))
    throw std::invalid_argument("uncertainty_product: s must be positive");

  // In the unit frame <x^2>_n = n + 1/2 and -<psi psi''> = n + 1/2; the
  // scale enters as s and 1/s. Both moments are integrated exactly by a
  // rule with M >= n + 2 nodes.
  const QuadratureRule rule = gauss_hermite(n + 8);
  double ex2 = 0.0;
  double ep2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const auto psi = eval_psi_all(n + 2, x);
    const double pn = psi[n];
    // psi_n'' from the ladder form of the derivative, applied twice.
    double dd = -(n + 0.5) * pn +
                0.5 * std::sqrt((n + 1.0) * (n + 2.0)) * psi[n + 2];
    if (n >= 2) dd += 0.5 * std::sqrt(n * (n - 1.0)) * psi[n - 2];
    ex2 += rule.mod_weights[i] * x * x * pn * pn;
    ep2 -= rule.mod_weights[i] * pn * dd;
  }
  Uncertainty u;
  u.dx = s * std::sqrt(ex2);
  u.dp = std::sqrt(ep2) / s;
  u.product = u.dx * u.dp;
  return u;
}

}  // namespace io2
