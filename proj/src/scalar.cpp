#include "io2/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace io2 {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::operator*(const Scalar& o) const {
  // (q0 + q1 i + q2 r + q3 i r)(p0 + p1 i + p2 r + p3 i r), r = sqrt(2):
  // i^2 = -1, r^2 = 2, (i r)^2 = -2.
  const mpq_class &a0 = q0_, &a1 = q1_, &a2 = q2_, &a3 = q3_;
  const mpq_class &b0 = o.q0_, &b1 = o.q1_, &b2 = o.q2_, &b3 = o.q3_;
  return Scalar(a0 * b0 - a1 * b1 + 2 * (a2 * b2 - a3 * b3),
                a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  // Norm down the tower: z * conj_i(z) lies in Q(sqrt2), then multiplying
  // by the sqrt2-conjugate lands in Q.
  const Scalar zi = conj_i();
  const Scalar w = *this * zi;          // in Q(sqrt2)
  const Scalar ws = w.conj_sqrt2();
  const Scalar norm = w * ws;           // rational
  return (zi * ws).mul_rational(1 / norm.q0());
}

std::complex<double> Scalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {q0_.get_d() + q2_.get_d() * r2, q1_.get_d() + q3_.get_d() * r2};
}

mpf_class Scalar::real_mpf(mp_bitcnt_t prec) const {
  mpf_class r2(2, prec);
  r2 = sqrt(r2);
  mpf_class out(q0_, prec);
  out += mpf_class(q2_, prec) * r2;
  return out;
}

mpf_class Scalar::imag_mpf(mp_bitcnt_t prec) const {
  mpf_class r2(2, prec);
  r2 = sqrt(r2);
  mpf_class out(q1_, prec);
  out += mpf_class(q3_, prec) * r2;
  return out;
}

int Scalar::lead_sign() const {
  for (const mpq_class* q : {&q0_, &q1_, &q2_, &q3_}) {
    const int s = sgn(*q);
    if (s != 0) return s;
  }
  return 0;
}

namespace {

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const mpq_class& q, const char* sym) {
    if (q == 0) return;
    mpq_class mag = abs(q);
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += (q < 0) ? " - " : " + ";
    }
    if (sym[0] == '\0') {
      out += rat_str(mag);
    } else if (mag == 1) {
      out += sym;
    } else {
      out += rat_str(mag) + "*" + sym;
    }
  };
  append(q0_, "");
  append(q1_, "i");
  append(q2_, "s2");
  append(q3_, "i*s2");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace io2
