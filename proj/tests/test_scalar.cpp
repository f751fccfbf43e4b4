#include <doctest.h>

#include <sstream>

#include "io2/scalar.hpp"

using io2::Scalar;

TEST_CASE("ring structure constants") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(Scalar::inv_sqrt2() * Scalar::sqrt2() == Scalar(1));
  const Scalar is = Scalar::i() * Scalar::sqrt2();
  CHECK(is * is == Scalar(-2));
}

TEST_CASE("rationals stay canonical") {
  const Scalar a = Scalar::rational(2, 4);
  CHECK(a == Scalar::rational(1, 2));
  CHECK(a.q0().get_den() == 2);
  CHECK(Scalar::rational(3, -6) == Scalar::rational(-1, 2));
  CHECK(Scalar::rational(-1, 2).q0().get_den() == 2);  // positive denominator
  CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic closes over all four components") {
  const Scalar z(mpq_class(1, 2), mpq_class(3), mpq_class(-1, 3),
                 mpq_class(2, 5));
  const Scalar w(mpq_class(-2), mpq_class(1, 7), mpq_class(4), mpq_class(0));
  const Scalar p = z * w;
  CHECK(p * Scalar(1) == p);
  CHECK(z * w == w * z);
  CHECK((z + w) - w == z);
  CHECK((z * (w + w)) == (z * w + z * w));
}

TEST_CASE("field inverse") {
  const Scalar z(mpq_class(1, 2), mpq_class(3), mpq_class(-1, 3),
                 mpq_class(2, 5));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(Scalar::sqrt2().inverse() == Scalar::inv_sqrt2());
  CHECK(Scalar::i().inverse() == -Scalar::i());
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("conjugations") {
  const Scalar z(mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(4));
  CHECK(z.conj_i().conj_i() == z);
  CHECK(z.conj_sqrt2().conj_sqrt2() == z);
  CHECK((z * z.conj_i()).q1() == 0);
  CHECK((z * z.conj_i()).q3() == 0);
}

TEST_CASE("float boundary") {
  const Scalar z(mpq_class(1, 2), mpq_class(-3), mpq_class(1), mpq_class(2));
  const auto c = z.to_complex();
  CHECK(c.real() == doctest::Approx(0.5 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c.imag() == doctest::Approx(-3 + 2 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(z.real_mpf().get_d() == doctest::Approx(c.real()).epsilon(1e-15));
  CHECK(z.imag_mpf().get_d() == doctest::Approx(c.imag()).epsilon(1e-15));
}

TEST_CASE("lead sign and text form") {
  CHECK(Scalar().str() == "0");
  CHECK(Scalar::rational(1, 2).str() == "1/2");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK((Scalar(1) + Scalar::sqrt2()).str() == "1 + s2");
  CHECK((Scalar::rational(3, 2) * Scalar::i()).str() == "3/2*i");
  CHECK((Scalar(-2) * Scalar::i() * Scalar::sqrt2()).str() == "-2*i*s2");
  CHECK(Scalar(-1).lead_sign() == -1);
  CHECK((Scalar(0) + Scalar::i()).lead_sign() == 1);
  CHECK(Scalar().lead_sign() == 0);
}
