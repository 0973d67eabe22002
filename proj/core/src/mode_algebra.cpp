#include <helimom/mode_algebra.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace helimom {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

Rational Rational::operator+(const Rational& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

Rational Rational::operator*(const Rational& o) const { return {num * o.num, den * o.den}; }

void Coeff::canonicalize() {
  if (q.is_zero()) {
    pow2_half = omega_k_half = omega_kp_half = 0;
    return;
  }
  // Fold the even part of the 2-exponent into q, leaving pow2_half in {0,1}.
  const int r = ((pow2_half % 2) + 2) % 2;
  int shift = (pow2_half - r) / 2;
  for (; shift > 0; --shift) q = q * GaussianRational(Rational(2));
  for (; shift < 0; ++shift) q = q * GaussianRational(Rational(1, 2));
  pow2_half = r;
}

Coeff Coeff::operator*(const Coeff& o) const {
  Coeff out;
  out.q = q * o.q;
  out.pow2_half = pow2_half + o.pow2_half;
  out.omega_k_half = omega_k_half + o.omega_k_half;
  out.omega_kp_half = omega_kp_half + o.omega_kp_half;
  out.canonicalize();
  return out;
}

Coeff coeff_one() {
  Coeff c;
  c.q = GaussianRational(Rational(1));
  return c;
}

Coeff coeff_i() {
  Coeff c;
  c.q = imaginary_unit();
  return c;
}

Coeff coeff_sqrt_omega_half(bool prime) {
  Coeff c;
  c.q = GaussianRational(Rational(1));
  c.pow2_half = -1;
  (prime ? c.omega_kp_half : c.omega_k_half) = 1;
  c.canonicalize();  // 2^(-1/2) -> (1/2) sqrt(2)
  return c;
}

namespace {

// Canonical ordering: momentum label, then dagger, then mode index, then the
// monomial exponents (so unmergeable coefficient monomials sit in a stable
// order too).
auto term_key(const Term& t) {
  return std::make_tuple(static_cast<int>(t.g.label), t.g.dag, t.g.s, t.c.omega_k_half,
                         t.c.omega_kp_half, t.c.pow2_half);
}

auto coeff_key(const Coeff& c) {
  return std::make_tuple(c.omega_k_half, c.omega_kp_half, c.pow2_half);
}

}  // namespace

void ModeExpr::canonicalize() {
  for (auto& t : terms) t.c.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return term_key(a) < term_key(b); });
  std::vector<Term> merged;
  for (const auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!merged.empty() && merged.back().g == t.g &&
        merged.back().c.same_monomial(t.c)) {
      merged.back().c.q = merged.back().c.q + t.c.q;
      if (merged.back().c.is_zero()) merged.pop_back();
    } else {
      merged.push_back(t);
    }
  }
  terms = std::move(merged);
}

bool ModeExpr::operator==(const ModeExpr& o) const {
  ModeExpr a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].g == b.terms[i].g && a.terms[i].c == b.terms[i].c)) return false;
  return true;
}

ModeExpr make_generator(MomentumLabel label, bool dag, int s, const Coeff& c) {
  if (s < 0 || s > 3) throw std::invalid_argument("make_generator: mode index out of range");
  ModeExpr e;
  e.terms.push_back({c, {label, dag, s}});
  e.canonicalize();
  return e;
}

ModeExpr operator+(const ModeExpr& a, const ModeExpr& b) {
  ModeExpr out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.canonicalize();
  return out;
}

ModeExpr operator*(const Coeff& c, const ModeExpr& e) {
  ModeExpr out = e;
  for (auto& t : out.terms) t.c = c * t.c;
  out.canonicalize();
  return out;
}

ModeExpr dagger(const ModeExpr& e) {
  ModeExpr out = e;
  for (auto& t : out.terms) {
    t.c.q = t.c.q.conjugate();
    t.g.dag = !t.g.dag;
  }
  out.canonicalize();
  return out;
}

void DeltaExpr::canonicalize() {
  for (auto& c : terms) c.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Coeff& a, const Coeff& b) { return coeff_key(a) < coeff_key(b); });
  std::vector<Coeff> merged;
  for (const auto& c : terms) {
    if (c.is_zero()) continue;
    if (!merged.empty() && merged.back().same_monomial(c)) {
      merged.back().q = merged.back().q + c.q;
      if (merged.back().is_zero()) merged.pop_back();
    } else {
      merged.push_back(c);
    }
  }
  terms = std::move(merged);
}

bool DeltaExpr::operator==(const DeltaExpr& o) const {
  DeltaExpr a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i] == b.terms[i])) return false;
  return true;
}

DeltaExpr DeltaExpr::operator+(const DeltaExpr& o) const {
  DeltaExpr out = *this;
  out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
  out.canonicalize();
  return out;
}

DeltaExpr DeltaExpr::operator-() const {
  DeltaExpr out = *this;
  for (auto& c : out.terms) c.q = -c.q;
  return out;
}

DeltaExpr unify_delta(DeltaExpr d) {
  for (auto& c : d.terms) {
    c.omega_k_half += c.omega_kp_half;
    c.omega_kp_half = 0;
  }
  d.canonicalize();
  return d;
}

DeltaExpr bracket(const ModeExpr& x, const ModeExpr& y) {
  DeltaExpr out;
  for (const auto& tx : x.terms)
    for (const auto& ty : y.terms) {
      if (tx.g.dag == ty.g.dag) continue;  // [c,c] = [cdag,cdag] = 0
      if (tx.g.s != ty.g.s) continue;      // g is diagonal
      if (tx.g.label == ty.g.label)
        throw std::invalid_argument(
            "bracket: nonzero contraction between equal momentum labels would be "
            "delta3(0)");
      // [c(s), cdag(s)] = -g_ss delta3; the reversed order flips the sign.
      const int gss = (tx.g.s == 0) ? +1 : -1;
      const int sign = tx.g.dag ? gss : -gss;
      Coeff c = tx.c * ty.c;
      c.q = c.q * GaussianRational(Rational(sign));
      out.terms.push_back(c);
    }
  return unify_delta(std::move(out));
}

ModeExpr build_b(int i, MomentumLabel label) {
  switch (i) {
    case 1:
      return make_generator(label, false, 1, coeff_i());
    case 2:
      return make_generator(label, false, 2, coeff_i());
    case 3: {
      Coeff minus_i = coeff_i();
      minus_i.q = -minus_i.q;
      return make_generator(label, false, 3, coeff_i()) +
             make_generator(label, false, 0, minus_i);
    }
    default:
      throw std::invalid_argument("build_b: index must be 1, 2, or 3");
  }
}

ModeExpr build_a(int lambda, MomentumLabel label) {
  const Coeff s = coeff_sqrt_omega_half(label == MomentumLabel::k_prime);
  Coeff plus_i = coeff_i();
  Coeff minus_i = coeff_i();
  minus_i.q = -minus_i.q;
  switch (lambda) {
    case +1:
      return s * (build_b(1, label) + minus_i * build_b(2, label));
    case -1:
      return s * (build_b(1, label) + plus_i * build_b(2, label));
    case 0:
      return s * build_b(3, label);
    default:
      throw std::invalid_argument("build_a: helicity must be +1, -1, or 0");
  }
}

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.num);
  if (r.den != 1) s += "/" + std::to_string(r.den);
  return s;
}

namespace {

// Imaginary part rendered as a factor of i: 1 -> "i", -1 -> "-i",
// 3/2 -> "(3/2)i".
std::string imag_factor(const Rational& im) {
  if (im == Rational(1)) return "i";
  if (im == Rational(-1)) return "-i";
  if (im.den != 1) return "(" + to_string(im) + ")i";
  return to_string(im) + "i";
}

}  // namespace

std::string to_string(const GaussianRational& q) {
  if (q.is_zero()) return "0";
  if (q.im.is_zero()) return to_string(q.re);
  if (q.re.is_zero()) return imag_factor(q.im);
  std::string s = to_string(q.re);
  s += (q.im.num > 0) ? " + " : " - ";
  Rational abs_im = q.im.num > 0 ? q.im : -q.im;
  s += imag_factor(abs_im);
  return s;
}

namespace {

std::string omega_factor(const char* name, int half) {
  if (half == 2) return name;
  if (half % 2 == 0) return std::string(name) + "^" + std::to_string(half / 2);
  return std::string(name) + "^(" + to_string(Rational(half, 2)) + ")";
}

}  // namespace

std::string to_string(const Coeff& c) {
  std::vector<std::string> factors;
  if (c.pow2_half == 1) factors.push_back("sqrt(2)");
  if (c.omega_k_half != 0) factors.push_back(omega_factor("w", c.omega_k_half));
  if (c.omega_kp_half != 0) factors.push_back(omega_factor("w'", c.omega_kp_half));

  const std::string qs = to_string(c.q);
  if (factors.empty()) return qs;

  std::string out;
  if (c.q == GaussianRational(Rational(-1))) {
    out = "-";
  } else if (!(c.q == GaussianRational(Rational(1)))) {
    const bool mixed = qs.find(' ') != std::string::npos;
    out = (mixed ? "(" + qs + ")" : qs) + "*";
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

namespace {

std::string generator_str(const Generator& g) {
  std::string s = g.dag ? "cdag(" : "c(";
  s += (g.label == MomentumLabel::k) ? "k" : "k'";
  s += "," + std::to_string(g.s) + ")";
  return s;
}

}  // namespace

std::string to_string(const ModeExpr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " + ";
    const Term& t = e.terms[i];
    if (t.c == coeff_one()) {
      out += generator_str(t.g);
    } else {
      Coeff minus_one = coeff_one();
      minus_one.q = -minus_one.q;
      if (t.c == minus_one)
        out += "-" + generator_str(t.g);
      else
        out += to_string(t.c) + "*" + generator_str(t.g);
    }
  }
  return out;
}

std::string to_string(const DeltaExpr& d) {
  if (d.is_zero()) return "0";
  const char* delta = "delta3(k - k')";
  if (d.terms.size() == 1) {
    const Coeff& c = d.terms[0];
    if (c == coeff_one()) return delta;
    Coeff minus_one = coeff_one();
    minus_one.q = -minus_one.q;
    if (c == minus_one) return std::string("-") + delta;
    return to_string(c) + "*" + delta;
  }
  std::string out = "(";
  for (size_t i = 0; i < d.terms.size(); ++i) {
    if (i) out += " + ";
    out += to_string(d.terms[i]);
  }
  return out + ")*" + delta;
}

AlgebraReport verify_transverse_commutators() {
  AlgebraReport rep;
  const int lambdas[3] = {+1, -1, 0};

  const auto lname = [](int l, bool dag) {
    std::string tag = (l == +1) ? "+1" : (l == -1) ? "-1" : "0";
    return std::string(dag ? "adag" : "a") + "(" + tag + ")";
  };
  const auto add = [&rep](std::string name, const DeltaExpr& derived,
                          const DeltaExpr& expected) {
    rep.entries.push_back(
        {std::move(name), to_string(expected), to_string(derived), derived == expected});
  };

  const DeltaExpr zero;
  DeltaExpr omega_delta;  // w * delta3(k - k')
  {
    Coeff w = coeff_one();
    w.omega_k_half = 2;
    omega_delta.terms.push_back(w);
  }

  for (int l : lambdas)
    for (int m : lambdas) {
      const DeltaExpr d =
          bracket(build_a(l, MomentumLabel::k), dagger(build_a(m, MomentumLabel::k_prime)));
      const DeltaExpr& expected = (l == m && l != 0) ? omega_delta : zero;
      add("[" + lname(l, false) + "(k), " + lname(m, true) + "(k')]", d, expected);
    }
  for (int l : lambdas)
    for (int m : lambdas) {
      const DeltaExpr d =
          bracket(build_a(l, MomentumLabel::k), build_a(m, MomentumLabel::k_prime));
      add("[" + lname(l, false) + "(k), " + lname(m, false) + "(k')]", d, zero);
    }
  for (int l : lambdas)
    for (int m : lambdas) {
      const DeltaExpr d = bracket(dagger(build_a(l, MomentumLabel::k)),
                                  dagger(build_a(m, MomentumLabel::k_prime)));
      add("[" + lname(l, true) + "(k), " + lname(m, true) + "(k')]", d, zero);
    }
  return rep;
}

}  // namespace helimom
