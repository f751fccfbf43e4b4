#include "io2/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace io2 {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649424828587030;  // pi^(-1/4)

// One recurrence step shared by eval_psi and eval_psi_all so the two agree
// bit for bit: psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}.
inline double psi_step(int k, double x, double pk, double pkm1) {
  return std::sqrt(2.0 / (k + 1)) * x * pk -
         std::sqrt(static_cast<double>(k) / (k + 1)) * pkm1;
}

inline double psi0(double x) { return kPiQuarterInv * std::exp(-0.5 * x * x); }

// Same recurrence in 80-bit arithmetic with the sqrt coefficients cached
// once; used by the node finder, where the extra precision keeps the final
// double-rounded roots accurate to the last ulp.
class PsiEvaluator {
 public:
  explicit PsiEvaluator(int n_max) {
    c1_.resize(static_cast<std::size_t>(n_max) + 1);
    c2_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
      c1_[k] = sqrtl(2.0L / (k + 1));
      c2_[k] = sqrtl(static_cast<long double>(k) / (k + 1));
    }
  }

  long double value(int n, long double x) const {
    long double p0 = psi0l(x);
    if (n == 0) return p0;
    long double p1 = sqrtl(2.0L) * x * p0;
    for (int k = 1; k < n; ++k) {
      const long double p2 = c1_[k] * x * p1 - c2_[k] * p0;
      p0 = p1;
      p1 = p2;
    }
    return p1;
  }

  // psi_n and psi_n' in one pass (recurrence up to n+1).
  void value_and_prime(int n, long double x, long double& f,
                       long double& fp) const {
    long double p0 = psi0l(x);
    long double p1 = sqrtl(2.0L) * x * p0;
    if (n == 0) {
      f = p0;
      fp = -sqrtl(0.5L) * p1;
      return;
    }
    for (int k = 1; k < n; ++k) {
      const long double p2 = c1_[k] * x * p1 - c2_[k] * p0;
      p0 = p1;
      p1 = p2;
    }
    const long double pnext = c1_[n] * x * p1 - c2_[n] * p0;
    f = p1;
    fp = sqrtl(n / 2.0L) * p0 - sqrtl((n + 1) / 2.0L) * pnext;
  }

 private:
  static long double psi0l(long double x) {
    constexpr long double pi_quarter_inv =
        0.75112554446494248285870300477623L;
    return pi_quarter_inv * expl(-0.5L * x * x);
  }

  std::vector<long double> c1_, c2_;
};

// Safeguarded Newton inside a sign-change bracket.
long double refine_root(const PsiEvaluator& ev, int M, long double lo,
                        long double hi) {
  long double flo = ev.value(M, lo);
  if (flo == 0.0L) return lo;
  if (ev.value(M, hi) == 0.0L) return hi;
  for (int it = 0; it < 12; ++it) {
    const long double mid = 0.5L * (lo + hi);
    const long double fmid = ev.value(M, mid);
    if (fmid == 0.0L) return mid;
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  long double x = 0.5L * (lo + hi);
  for (int it = 0; it < 40; ++it) {
    long double f, fp;
    ev.value_and_prime(M, x, f, fp);
    if (f == 0.0L) return x;
    if ((f > 0) == (flo > 0)) {
      lo = x;
    } else {
      hi = x;
    }
    long double xn = (fp != 0.0L) ? x - f / fp : 0.5L * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5L * (lo + hi);
    if (fabsl(xn - x) < 1e-19L * (1.0L + fabsl(x))) return xn;
    x = xn;
  }
  return x;
}

}  // namespace

double eval_psi(int n, double x) {
  if (n < 0) throw std::invalid_argument("eval_psi: n must be >= 0");
  double p0 = psi0(x);
  if (n == 0) return p0;
  double p1 = std::sqrt(2.0) * x * p0;
  for (int k = 1; k < n; ++k) {
    const double p2 = psi_step(k, x, p1, p0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::vector<double> eval_psi_all(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("eval_psi_all: n_max must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = psi0(x);
  if (n_max == 0) return out;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 1; k < n_max; ++k) out[k + 1] = psi_step(k, x, out[k], out[k - 1]);
  return out;
}

double eval_psi_general(int n, const FrameParams& frame, double x) {
  if (!(frame.s > 0.0))
    throw std::invalid_argument("eval_psi_general: scale s must be positive");
  return eval_psi(n, (x - frame.x0) / frame.s) / std::sqrt(frame.s);
}

double psi_prime(int n, double x) {
  if (n < 0) throw std::invalid_argument("psi_prime: n must be >= 0");
  const double up = std::sqrt((n + 1) / 2.0) * eval_psi(n + 1, x);
  if (n == 0) return -up;
  return std::sqrt(n / 2.0) * eval_psi(n - 1, x) - up;
}

QuadratureRule gauss_hermite(int M) {
  if (M < 1 || M > 1024)
    throw std::invalid_argument("gauss_hermite: M must be in [1, 1024]");

  const PsiEvaluator ev(M + 1);

  // Interlacing chain on the non-negative half line: the positive roots of
  // psi_k are separated by the non-negative roots of psi_{k-1}, with the
  // classical bound sqrt(2k+1) closing the outer bracket.
  std::vector<long double> prev{0.0L};  // non-negative roots of psi_1
  for (int k = 2; k <= M; ++k) {
    std::vector<long double> edges;
    edges.push_back(0.0L);
    for (long double r : prev)
      if (r > 0.0L) edges.push_back(r);
    edges.push_back(sqrtl(2.0L * k + 1.0L));

    std::vector<long double> cur;
    if (k % 2 != 0) cur.push_back(0.0L);
    const int want = k / 2;  // positive roots of psi_k
    int found = 0;
    for (std::size_t j = 0; j + 1 < edges.size() && found < want; ++j) {
      long double lo = edges[j];
      const long double hi = edges[j + 1];
      long double flo = ev.value(k, lo);
      if (flo == 0.0L) {  // odd psi_k at the origin edge
        lo += (hi - lo) * 1e-18L;
        flo = ev.value(k, lo);
      }
      const long double fhi = ev.value(k, hi);
      if ((flo > 0) != (fhi > 0)) {
        cur.push_back(refine_root(ev, k, lo, hi));
        ++found;
      }
    }
    prev = std::move(cur);
  }

  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(M));
  for (auto it = prev.rbegin(); it != prev.rend(); ++it)
    if (*it > 0.0L) rule.nodes.push_back(-static_cast<double>(*it));
  if (M % 2 != 0) rule.nodes.push_back(0.0);
  for (long double r : prev)
    if (r > 0.0L) rule.nodes.push_back(static_cast<double>(r));

  rule.mod_weights.reserve(rule.nodes.size());
  for (double x : rule.nodes) {
    const auto psis = eval_psi_all(M - 1, x);
    double s = 0.0;
    for (double v : psis) s += v * v;
    rule.mod_weights.push_back(1.0 / s);
  }
  return rule;
}

double integrate(const std::vector<double>& samples_at_nodes,
                 const QuadratureRule& rule) {
  if (samples_at_nodes.size() != rule.nodes.size())
    throw std::invalid_argument("integrate: sample/node length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.mod_weights.size(); ++i)
    acc += rule.mod_weights[i] * samples_at_nodes[i];
  return acc;
}

}  // namespace io2
