#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace helimom {

// Exact scalar arithmetic for the mode-operator algebra. Everything in this
// module is symbolic: no floating point anywhere, so a derived commutator
// either matches the expected table entry exactly or it does not.

// Reduced fraction, denominator kept positive. The numbers involved never
// leave the single digits, so plain 64-bit arithmetic with gcd reduction is
// all that is needed.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }
  Rational operator-() const { return {-num, den}; }
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
};

// Gaussian rational re + im*i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conjugate() const { return {re, -im}; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

// One monomial coefficient
//
//   q * 2^(pow2_half/2) * w^(omega_k_half/2) * w'^(omega_kp_half/2)
//
// with q a Gaussian rational and all exponents exact half-integers stored in
// doubled form. sqrt(omega/2) is the pair (omega exponent +1, 2-exponent -1).
// Canonical form folds the even part of the 2-exponent into q, leaving
// pow2_half in {0, 1} (the residual factor is 1 or sqrt 2), so equal values
// always have equal representations.
struct Coeff {
  GaussianRational q;
  int pow2_half = 0;
  int omega_k_half = 0;
  int omega_kp_half = 0;

  void canonicalize();
  Coeff operator*(const Coeff& o) const;
  bool operator==(const Coeff& o) const {
    return q == o.q && pow2_half == o.pow2_half && omega_k_half == o.omega_k_half &&
           omega_kp_half == o.omega_kp_half;
  }
  bool is_zero() const { return q.is_zero(); }
  bool same_monomial(const Coeff& o) const {
    return pow2_half == o.pow2_half && omega_k_half == o.omega_k_half &&
           omega_kp_half == o.omega_kp_half;
  }
};

Coeff coeff_one();
Coeff coeff_i();
// sqrt(omega/2) attached to the stated momentum label.
Coeff coeff_sqrt_omega_half(bool prime);

enum class MomentumLabel { k, k_prime };

// A single annihilation/creation generator c(label, s) or cdag(label, s),
// s in {0, 1, 2, 3}.
struct Generator {
  MomentumLabel label = MomentumLabel::k;
  bool dag = false;
  int s = 0;

  bool operator==(const Generator& o) const {
    return label == o.label && dag == o.dag && s == o.s;
  }
};

struct Term {
  Coeff c;
  Generator g;
};

// Finite linear combination of generators. Kept canonical: terms sorted by
// (momentum label, dagger, s) then by monomial exponents, like terms merged,
// zero terms dropped.
struct ModeExpr {
  std::vector<Term> terms;

  void canonicalize();
  bool operator==(const ModeExpr& o) const;
};

ModeExpr make_generator(MomentumLabel label, bool dag, int s, const Coeff& c = coeff_one());
ModeExpr operator+(const ModeExpr& a, const ModeExpr& b);
ModeExpr operator*(const Coeff& c, const ModeExpr& e);
// Hermitian adjoint: conjugates every coefficient and toggles the dagger
// flags. An involution.
ModeExpr dagger(const ModeExpr& e);

// Scalar multiple of the formal symbol delta3(k - k'), as a sum of monomial
// coefficients; the empty sum is the zero expression. Produced by bracket()
// already unified (no w' powers remain).
struct DeltaExpr {
  std::vector<Coeff> terms;

  void canonicalize();
  bool is_zero() const { return terms.empty(); }
  bool operator==(const DeltaExpr& o) const;
  DeltaExpr operator+(const DeltaExpr& o) const;
  DeltaExpr operator-() const;
};

// The delta identifies the two momenta, so any w' power in a coefficient
// collapses onto w. Idempotent.
DeltaExpr unify_delta(DeltaExpr d);

// Bilinear extension of the canonical commutation relations
//
//   [c(k', s'), cdag(k, s)] = -g_{ss'} delta3(k - k'),  g = diag(1,-1,-1,-1),
//
// with brackets of two c's or two cdag's vanishing. The surviving
// contractions must connect the two distinct momentum labels: a nonzero
// contraction between two generators carrying the *same* label would be
// delta3(0), which has no place in this ring, so that call throws
// std::invalid_argument rather than returning something formal-looking.
DeltaExpr bracket(const ModeExpr& x, const ModeExpr& y);

// b(k,1) = i c(k,1); b(k,2) = i c(k,2); b(k,3) = i [c(k,3) - c(k,0)].
ModeExpr build_b(int i, MomentumLabel label = MomentumLabel::k);

// a_{+1} = sqrt(w/2) [b1 - i b2]; a_{-1} = sqrt(w/2) [b1 + i b2];
// a_0 = sqrt(w/2) b3. lambda in {+1, -1, 0}.
ModeExpr build_a(int lambda, MomentumLabel label = MomentumLabel::k);

std::string to_string(const Rational& r);
std::string to_string(const GaussianRational& q);
std::string to_string(const Coeff& c);
std::string to_string(const ModeExpr& e);
std::string to_string(const DeltaExpr& d);

// One derived commutator against its expected value. Exact comparison: pass
// means the two expressions are identical element by element.
struct AlgebraReport {
  struct Entry {
    std::string name;
    std::string expected;
    std::string derived;
    bool pass = false;
  };
  std::vector<Entry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Derives the full mode-operator commutator table from the axiom above and
// the b/a definitions:
//
//   [a_l(k), adag_m(k')] = w delta_{lm} delta3(k - k')   for l, m in {+1,-1}
//   [a_0(k), adag_0(k')] = 0
//   all same-type brackets and all transverse/longitudinal cross brackets = 0
//
// and reports each row with its expected and derived symbolic values.
AlgebraReport verify_transverse_commutators();

}  // namespace helimom
