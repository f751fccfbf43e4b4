#pragma once

#include <complex>
#include <random>

#include "io2/algebra.hpp"

namespace io2::testing {

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

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace io2::testing
