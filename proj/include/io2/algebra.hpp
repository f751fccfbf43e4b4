#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "io2/scalar.hpp"

namespace io2 {

/// Which PBW monomial alphabet an element is written in.
///   Differential: X^a D^b N^g   (N rightmost)
///   Ladder:       ad^a N^b a^g  (N in the middle)
enum class Basis { Differential, Ladder };

/// Generator tags. X, D live in the differential basis; ADag, A in the
/// ladder basis; N and Id are shared. The hermitian momentum P is not a
/// stored generator: it is the presentation-layer alias -i*D.
enum class Gen { X, D, N, Id, ADag, A };

/// Exponent triple of an ordered monomial in the active basis.
using Expo = std::array<unsigned, 3>;

/// Graded order used for canonical storage and printing: total degree
/// descending, then lexicographic descending.
struct MonoOrder {
  bool operator()(const Expo& a, const Expo& b) const {
    const unsigned da = a[0] + a[1] + a[2];
    const unsigned db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

using TermMap = std::map<Expo, Scalar, MonoOrder>;

/// Finite sum of ordered monomials with exact coefficients. The stored map
/// is canonical: no zero coefficients, one entry per exponent triple, so
/// algebra-level equality is map equality.
class UEAElement {
 public:
  explicit UEAElement(Basis basis = Basis::Differential) : basis_(basis) {}

  static UEAElement zero(Basis basis) { return UEAElement(basis); }
  static UEAElement identity(Basis basis);
  static UEAElement monomial(Basis basis, const Expo& e, const Scalar& c);
  /// Single generator as an element. N and Id default to the differential
  /// basis unless told otherwise; X/D and ADag/A fix their own basis.
  static UEAElement generator(Gen g, Basis basis = Basis::Differential);

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// max over monomials of a + b + g (0 for the zero element).
  unsigned degree() const;
  /// max exponent in the middle differential slot (the D power).
  unsigned max_d_power() const;

  void add_term(const Expo& e, const Scalar& c);

  UEAElement operator+(const UEAElement& o) const;
  UEAElement operator-(const UEAElement& o) const;
  UEAElement operator-() const;
  UEAElement scaled(const Scalar& c) const;

  bool operator==(const UEAElement& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }
  bool operator!=(const UEAElement& o) const { return !(*this == o); }

 private:
  Basis basis_;
  TermMap terms_;
};

/// Normal-ordered product modulo the io(2) relations, canonical output.
/// Throws std::invalid_argument when the bases differ.
UEAElement product(const UEAElement& A, const UEAElement& B);

/// product(A,B) - product(B,A).
UEAElement commutator(const UEAElement& A, const UEAElement& B);

/// Exact substitution X = (ad + a)/sqrt2, D = (a - ad)/sqrt2, normal
/// ordered in (ad, N, a).
UEAElement to_ladder(const UEAElement& A);

/// Exact substitution ad = (X - D)/sqrt2, a = (X + D)/sqrt2, normal
/// ordered in (X, D, N).
UEAElement from_ladder(const UEAElement& A);

/// (1/2)X^2 - (1/2)D^2 - N - (1/2)I, the central element whose vanishing
/// selects the Hermite-function representation.
UEAElement casimir();

/// Rewrites D^2 -> X^2 - 2N - 1 (leftmost D^2 of the largest monomial
/// first) until every monomial has D power <= 1. Same operator on the
/// zero-Casimir representation; input must be differential.
UEAElement casimir_reduce(const UEAElement& A);

/// Equality as operators on the zero-Casimir representation: both sides
/// are brought to the differential basis, reduced, and compared exactly.
bool equals_mod_casimir(const UEAElement& A, const UEAElement& B);

/// Canonical text form, e.g. "(1/2)*X^2 - (1/2)*D^2 - N - (1/2)*I".
/// Parsing this with the operator grammar reproduces the element exactly.
std::string to_string(const UEAElement& A);

/// Guards runaway rewriting. Rule applications are counted per thread;
/// exceeding the scope budget throws std::runtime_error. Scopes nest.
class RewriteBudgetScope {
 public:
  explicit RewriteBudgetScope(std::uint64_t budget);
  ~RewriteBudgetScope();
  RewriteBudgetScope(const RewriteBudgetScope&) = delete;
  RewriteBudgetScope& operator=(const RewriteBudgetScope&) = delete;
  /// Rule applications charged since this scope opened.
  std::uint64_t used() const;

 private:
  std::uint64_t saved_budget_;
  std::uint64_t start_steps_;
};

}  // namespace io2
