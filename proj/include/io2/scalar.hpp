#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace io2 {

/// Exact element of the ring Q(i, sqrt(2)), stored as
///   q0 + q1*i + q2*sqrt(2) + q3*i*sqrt(2)
/// with each component a canonical GMP rational. The ring is closed under
/// the structure constants of io(2) and the 1/sqrt(2) of the ladder map,
/// and is in fact a field, so exact inverses are available.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : q0_(n) {}
  explicit Scalar(const mpq_class& q) : q0_(q) { q0_.canonicalize(); }
  Scalar(const mpq_class& q0, const mpq_class& q1, const mpq_class& q2,
         const mpq_class& q3)
      : q0_(q0), q1_(q1), q2_(q2), q3_(q3) {
    q0_.canonicalize();
    q1_.canonicalize();
    q2_.canonicalize();
    q3_.canonicalize();
  }

  static Scalar rational(long num, long den);
  static Scalar i() { return Scalar(0, 1, 0, 0); }
  static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
  /// 1/sqrt(2) = sqrt(2)/2.
  static Scalar inv_sqrt2() { return Scalar(0, 0, mpq_class(1, 2), 0); }

  const mpq_class& q0() const { return q0_; }
  const mpq_class& q1() const { return q1_; }
  const mpq_class& q2() const { return q2_; }
  const mpq_class& q3() const { return q3_; }

  bool is_zero() const {
    return q0_ == 0 && q1_ == 0 && q2_ == 0 && q3_ == 0;
  }
  bool is_rational() const { return q1_ == 0 && q2_ == 0 && q3_ == 0; }

  Scalar operator-() const { return Scalar(-q0_, -q1_, -q2_, -q3_); }
  Scalar operator+(const Scalar& o) const {
    return Scalar(q0_ + o.q0_, q1_ + o.q1_, q2_ + o.q2_, q3_ + o.q3_);
  }
  Scalar operator-(const Scalar& o) const {
    return Scalar(q0_ - o.q0_, q1_ - o.q1_, q2_ - o.q2_, q3_ - o.q3_);
  }
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar mul_rational(const mpq_class& q) const {
    return Scalar(q0_ * q, q1_ * q, q2_ * q, q3_ * q);
  }
  Scalar mul_int(const mpz_class& z) const {
    return Scalar(q0_ * z, q1_ * z, q2_ * z, q3_ * z);
  }

  /// i -> -i.
  Scalar conj_i() const { return Scalar(q0_, -q1_, q2_, -q3_); }
  /// sqrt(2) -> -sqrt(2).
  Scalar conj_sqrt2() const { return Scalar(q0_, q1_, -q2_, -q3_); }

  /// Exact multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const {
    return q0_ == o.q0_ && q1_ == o.q1_ && q2_ == o.q2_ && q3_ == o.q3_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  /// Real/imaginary part as a GMP float at the given precision (bits).
  mpf_class real_mpf(mp_bitcnt_t prec = 256) const;
  mpf_class imag_mpf(mp_bitcnt_t prec = 256) const;

  /// Sign of the first nonzero component, 0 for zero. Used by the printer
  /// to move a minus sign out of the coefficient.
  int lead_sign() const;

  /// Debug/CLI form, e.g. "1/2 + 3*i - s2". The canonical operator text
  /// is produced by the element printer, not here.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class q0_, q1_, q2_, q3_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace io2
