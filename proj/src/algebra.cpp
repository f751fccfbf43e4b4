#include "io2/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace io2 {

namespace {

struct RewriteCounter {
  std::uint64_t steps = 0;
  std::uint64_t budget = 1'000'000'000ULL;
};

thread_local RewriteCounter g_rewrite;

inline void charge_step() {
  if (++g_rewrite.steps > g_rewrite.budget)
    throw std::runtime_error("rewrite budget exceeded");
}

mpz_class binom(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

RewriteBudgetScope::RewriteBudgetScope(std::uint64_t budget)
    : saved_budget_(g_rewrite.budget), start_steps_(g_rewrite.steps) {
  g_rewrite.budget = g_rewrite.steps + budget;
}

RewriteBudgetScope::~RewriteBudgetScope() { g_rewrite.budget = saved_budget_; }

std::uint64_t RewriteBudgetScope::used() const {
  return g_rewrite.steps - start_steps_;
}

UEAElement UEAElement::identity(Basis basis) {
  return monomial(basis, {0, 0, 0}, Scalar(1));
}

UEAElement UEAElement::monomial(Basis basis, const Expo& e, const Scalar& c) {
  UEAElement out(basis);
  out.add_term(e, c);
  return out;
}

UEAElement UEAElement::generator(Gen g, Basis basis) {
  switch (g) {
    case Gen::X:
      return monomial(Basis::Differential, {1, 0, 0}, Scalar(1));
    case Gen::D:
      return monomial(Basis::Differential, {0, 1, 0}, Scalar(1));
    case Gen::ADag:
      return monomial(Basis::Ladder, {1, 0, 0}, Scalar(1));
    case Gen::A:
      return monomial(Basis::Ladder, {0, 0, 1}, Scalar(1));
    case Gen::N:
      return basis == Basis::Differential
                 ? monomial(basis, {0, 0, 1}, Scalar(1))
                 : monomial(basis, {0, 1, 0}, Scalar(1));
    case Gen::Id:
      return identity(basis);
  }
  throw std::logic_error("unreachable generator tag");
}

unsigned UEAElement::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

unsigned UEAElement::max_d_power() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[1]);
  return d;
}

void UEAElement::add_term(const Expo& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
  if (basis_ != o.basis_)
    throw std::invalid_argument("element sum: basis mismatch");
  UEAElement out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
  if (basis_ != o.basis_)
    throw std::invalid_argument("element difference: basis mismatch");
  UEAElement out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

UEAElement UEAElement::operator-() const {
  UEAElement out(basis_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

UEAElement UEAElement::scaled(const Scalar& c) const {
  UEAElement out(basis_);
  if (c.is_zero()) return out;
  for (const auto& [e, s] : terms_) out.add_term(e, s * c);
  return out;
}

namespace {

// --- multiplication on the left by a single generator ------------------
//
// Both bases keep normal order under these expansions, so a product is a
// fold of single-generator steps. Differential rules used here:
//   D X^a          = X^a D + a X^{a-1}
//   [N, X^a]       = -a X^{a-1} D - C(a,2) X^{a-2}
//   [N, D^b]       = -b X D^{b-1} - C(b,2) D^{b-2}
// Ladder rules:
//   a ad^k         = ad^k a + k ad^{k-1}
//   N ad^k         = ad^k (N + k)
//   a N^b          = (N + 1)^b a

void lmul_gen_diff(Gen g, const Expo& e, const Scalar& c, TermMap& acc);
void lmul_gen_ladder(Gen g, const Expo& e, const Scalar& c, TermMap& acc);

void accumulate(TermMap& acc, const Expo& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(e);
  if (it == acc.end()) {
    acc.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void lmul_gen_diff(Gen g, const Expo& e, const Scalar& c, TermMap& acc) {
  charge_step();
  const unsigned a = e[0], b = e[1], n = e[2];
  switch (g) {
    case Gen::X:
      accumulate(acc, {a + 1, b, n}, c);
      return;
    case Gen::D:
      accumulate(acc, {a, b + 1, n}, c);
      if (a > 0) accumulate(acc, {a - 1, b, n}, c.mul_int(a));
      return;
    case Gen::N:
      accumulate(acc, {a, b, n + 1}, c);
      if (a > 0) {
        accumulate(acc, {a - 1, b + 1, n}, -c.mul_int(a));
        if (a > 1) accumulate(acc, {a - 2, b, n}, -c.mul_int(binom(a, 2)));
      }
      if (b > 0) {
        accumulate(acc, {a + 1, b - 1, n}, -c.mul_int(b));
        if (b > 1) accumulate(acc, {a, b - 2, n}, -c.mul_int(binom(b, 2)));
      }
      return;
    case Gen::Id:
      accumulate(acc, e, c);
      return;
    default:
      throw std::invalid_argument("ladder generator applied in differential basis");
  }
}

void lmul_gen_ladder(Gen g, const Expo& e, const Scalar& c, TermMap& acc) {
  charge_step();
  const unsigned ad = e[0], n = e[1], a = e[2];
  switch (g) {
    case Gen::ADag:
      accumulate(acc, {ad + 1, n, a}, c);
      return;
    case Gen::N:
      accumulate(acc, {ad, n + 1, a}, c);
      if (ad > 0) accumulate(acc, {ad, n, a}, c.mul_int(ad));
      return;
    case Gen::A: {
      // a ad^k N^b a^g = ad^k (N+1)^b a^{g+1} + k ad^{k-1} N^b a^g
      for (unsigned j = 0; j <= n; ++j)
        accumulate(acc, {ad, j, a + 1}, c.mul_int(binom(n, j)));
      if (ad > 0) accumulate(acc, {ad - 1, n, a}, c.mul_int(ad));
      return;
    }
    case Gen::Id:
      accumulate(acc, e, c);
      return;
    default:
      throw std::invalid_argument("differential generator applied in ladder basis");
  }
}

void lmul_gen(Basis basis, Gen g, const TermMap& in, TermMap& out) {
  for (const auto& [e, c] : in) {
    if (basis == Basis::Differential)
      lmul_gen_diff(g, e, c, out);
    else
      lmul_gen_ladder(g, e, c, out);
  }
}

// Left-multiplies acc by the ordered monomial with exponents e, applying
// generators right to left.
TermMap lmul_monomial(Basis basis, const Expo& e, TermMap acc) {
  const Gen slots_diff[3] = {Gen::X, Gen::D, Gen::N};
  const Gen slots_ladder[3] = {Gen::ADag, Gen::N, Gen::A};
  const Gen* slots = basis == Basis::Differential ? slots_diff : slots_ladder;
  for (int slot = 2; slot >= 0; --slot) {
    for (unsigned rep = 0; rep < e[slot]; ++rep) {
      TermMap next;
      lmul_gen(basis, slots[slot], acc, next);
      acc = std::move(next);
    }
  }
  return acc;
}

}  // namespace

UEAElement product(const UEAElement& A, const UEAElement& B) {
  if (A.basis() != B.basis())
    throw std::invalid_argument("product: basis mismatch");
  UEAElement out(A.basis());
  for (const auto& [e1, c1] : A.terms()) {
    TermMap scaled;
    for (const auto& [e2, c2] : B.terms()) {
      const Scalar c = c1 * c2;
      if (!c.is_zero()) scaled.emplace(e2, c);
    }
    TermMap part = lmul_monomial(A.basis(), e1, std::move(scaled));
    for (const auto& [e, c] : part) out.add_term(e, c);
  }
  return out;
}

UEAElement commutator(const UEAElement& A, const UEAElement& B) {
  return product(A, B) - product(B, A);
}

namespace {

// Substitutes every generator of a monomial by a linear element of the
// target basis, folding right to left. Shared by the two basis changes.
UEAElement substitute_monomial(Basis target, const Expo& e, const Scalar& c,
                               const std::vector<std::pair<Gen, Scalar>>* subs) {
  UEAElement acc = UEAElement::monomial(target, {0, 0, 0}, c);
  for (int slot = 2; slot >= 0; --slot) {
    for (unsigned rep = 0; rep < e[slot]; ++rep) {
      const auto& lin = subs[slot];
      TermMap next;
      for (const auto& [g, w] : lin) {
        TermMap part;
        lmul_gen(target, g, acc.terms(), part);
        for (const auto& [pe, pc] : part) accumulate(next, pe, pc * w);
      }
      UEAElement folded(target);
      for (const auto& [pe, pc] : next) folded.add_term(pe, pc);
      acc = std::move(folded);
    }
  }
  return acc;
}

}  // namespace

UEAElement to_ladder(const UEAElement& A) {
  if (A.basis() == Basis::Ladder) return A;
  const Scalar h = Scalar::inv_sqrt2();
  // slot 0: X -> (ad + a)/sqrt2, slot 1: D -> (a - ad)/sqrt2, slot 2: N -> N
  const std::vector<std::pair<Gen, Scalar>> subs[3] = {
      {{Gen::ADag, h}, {Gen::A, h}},
      {{Gen::A, h}, {Gen::ADag, -h}},
      {{Gen::N, Scalar(1)}}};
  UEAElement out(Basis::Ladder);
  for (const auto& [e, c] : A.terms())
    out = out + substitute_monomial(Basis::Ladder, e, c, subs);
  return out;
}

UEAElement from_ladder(const UEAElement& A) {
  if (A.basis() == Basis::Differential) return A;
  const Scalar h = Scalar::inv_sqrt2();
  // slot 0: ad -> (X - D)/sqrt2, slot 1: N -> N, slot 2: a -> (X + D)/sqrt2
  const std::vector<std::pair<Gen, Scalar>> subs[3] = {
      {{Gen::X, h}, {Gen::D, -h}},
      {{Gen::N, Scalar(1)}},
      {{Gen::X, h}, {Gen::D, h}}};
  UEAElement out(Basis::Differential);
  for (const auto& [e, c] : A.terms())
    out = out + substitute_monomial(Basis::Differential, e, c, subs);
  return out;
}

UEAElement casimir() {
  UEAElement out(Basis::Differential);
  const Scalar half = Scalar::rational(1, 2);
  out.add_term({2, 0, 0}, half);
  out.add_term({0, 2, 0}, -half);
  out.add_term({0, 0, 1}, Scalar(-1));
  out.add_term({0, 0, 0}, -half);
  return out;
}

UEAElement casimir_reduce(const UEAElement& A) {
  if (A.basis() != Basis::Differential)
    throw std::invalid_argument("casimir_reduce: input must be differential");

  // D^2 = X^2 - 2N - 1 on the zero-Casimir representation.
  UEAElement dsq_image(Basis::Differential);
  dsq_image.add_term({2, 0, 0}, Scalar(1));
  dsq_image.add_term({0, 0, 1}, Scalar(-2));
  dsq_image.add_term({0, 0, 0}, Scalar(-1));

  UEAElement cur = A;
  for (;;) {
    // Largest monomial (degree-lex) still carrying a D^2 factor.
    const TermMap& ts = cur.terms();
    auto it = ts.begin();
    for (; it != ts.end(); ++it)
      if (it->first[1] >= 2) break;
    if (it == ts.end()) return cur;

    charge_step();
    const Expo e = it->first;
    const Scalar c = it->second;
    cur.add_term(e, -c);  // remove the monomial being rewritten

    // X^a (X^2 - 2N - 1) D^{b-2} N^g, normal ordered.
    UEAElement left =
        UEAElement::monomial(Basis::Differential, {e[0], 0, 0}, c);
    UEAElement right =
        UEAElement::monomial(Basis::Differential, {0, e[1] - 2, e[2]}, Scalar(1));
    cur = cur + product(product(left, dsq_image), right);
  }
}

bool equals_mod_casimir(const UEAElement& A, const UEAElement& B) {
  return casimir_reduce(from_ladder(A)) == casimir_reduce(from_ladder(B));
}

namespace {

std::string rational_factor(const mpq_class& q) {
  std::ostringstream os;
  if (q.get_den() == 1) {
    os << q;
    return os.str();
  }
  os << "(" << q << ")";
  return os.str();
}

// Scalar as a product prefix: "2", "(1/2)", "i", "(3/2)*i*s2",
// "(1/2 + s2)". Assumes the printer already extracted the leading sign.
std::string scalar_factor(const Scalar& s) {
  int nonzero = 0;
  for (const mpq_class* q : {&s.q0(), &s.q1(), &s.q2(), &s.q3()})
    if (*q != 0) ++nonzero;
  if (nonzero > 1) return "(" + s.str() + ")";
  if (s.q0() != 0) return rational_factor(s.q0());
  auto with_sym = [](const mpq_class& q, const char* sym) {
    if (q == 1) return std::string(sym);
    return rational_factor(q) + "*" + sym;
  };
  if (s.q1() != 0) return with_sym(s.q1(), "i");
  if (s.q2() != 0) return with_sym(s.q2(), "s2");
  return with_sym(s.q3(), "i*s2");
}

std::string monomial_gens(Basis basis, const Expo& e) {
  const char* names_diff[3] = {"X", "D", "N"};
  const char* names_ladder[3] = {"ad", "N", "a"};
  const char* const* names =
      basis == Basis::Differential ? names_diff : names_ladder;
  std::string out;
  for (int slot = 0; slot < 3; ++slot) {
    if (e[slot] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[slot];
    if (e[slot] > 1) out += "^" + std::to_string(e[slot]);
  }
  if (out.empty()) out = "I";
  return out;
}

}  // namespace

std::string to_string(const UEAElement& A) {
  if (A.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : A.terms()) {
    const bool neg = c.lead_sign() < 0;
    const Scalar mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string gens = monomial_gens(A.basis(), e);
    const bool is_one = mag == Scalar(1);
    if (is_one)
      out += gens;
    else
      out += scalar_factor(mag) + "*" + gens;
  }
  return out;
}

}  // namespace io2
