#include <doctest.h>

#include <helimom/mode_algebra.hpp>

#include <stdexcept>
#include <string>

using namespace helimom;

namespace {

// One omega power attached to a delta: the nonzero transverse contraction.
DeltaExpr omega_delta() {
  Coeff c = coeff_one();
  c.omega_k_half = 2;
  return DeltaExpr{{c}};
}

Coeff minus_one() {
  Coeff c = coeff_one();
  c.q = -c.q;
  return c;
}

}  // namespace

TEST_SUITE("mode_algebra") {

TEST_CASE("rationals normalize to lowest terms with a positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("gaussian rationals multiply like complex numbers and i squares to minus one") {
  const GaussianRational i = imaginary_unit();
  CHECK(i * i == GaussianRational{Rational(-1), Rational(0)});
  CHECK(i.conjugate() == -i);
  const GaussianRational z{Rational(1, 2), Rational(-1, 3)};
  CHECK(z * z.conjugate() ==
        GaussianRational{Rational(1, 4) + Rational(1, 9), Rational(0)});
}

TEST_CASE("coefficient canonicalization folds even powers of sqrt(2)") {
  Coeff c = coeff_one();
  c.pow2_half = 4;  // 2^2
  c.canonicalize();
  CHECK(c.pow2_half == 0);
  CHECK(c.q == GaussianRational{Rational(4), Rational(0)});

  Coeff d = coeff_one();
  d.pow2_half = 3;  // 2 * sqrt(2)
  d.canonicalize();
  CHECK(d.pow2_half == 1);
  CHECK(d.q == GaussianRational{Rational(2), Rational(0)});

  Coeff e = coeff_one();
  e.pow2_half = -1;  // 1/sqrt(2) = (1/2) sqrt(2)
  e.canonicalize();
  CHECK(e.pow2_half == 1);
  CHECK(e.q == GaussianRational{Rational(1, 2), Rational(0)});

  CHECK(coeff_i() * coeff_i() == coeff_one() * minus_one());
}

TEST_CASE("generator brackets implement the canonical relations with the metric sign") {
  const ModeExpr c1 = make_generator(MomentumLabel::k_prime, false, 1);
  const ModeExpr c1d = make_generator(MomentumLabel::k, true, 1);
  const ModeExpr c0 = make_generator(MomentumLabel::k_prime, false, 0);
  const ModeExpr c0d = make_generator(MomentumLabel::k, true, 0);
  const ModeExpr c2 = make_generator(MomentumLabel::k, false, 2);
  const ModeExpr c2d = make_generator(MomentumLabel::k, true, 2);

  // Spatial components contract with +delta3, the temporal one with -delta3.
  CHECK(bracket(c1, c1d) == DeltaExpr{{coeff_one()}});
  CHECK(bracket(c0, c0d) == DeltaExpr{{minus_one()}});
  CHECK(bracket(c1, c2).is_zero());        // annihilator with annihilator
  CHECK(bracket(c1d, c2d).is_zero());      // creator with creator
  CHECK(bracket(c1, c2d).is_zero());       // mismatched species
  CHECK(bracket(c1d, make_generator(MomentumLabel::k_prime, false, 1)) ==
        DeltaExpr{{minus_one()}});         // reversed order flips the sign
}

TEST_CASE("the bracket is antisymmetric and additive in both slots") {
  const ModeExpr x = build_a(+1);
  const ModeExpr z = build_a(-1);
  const ModeExpr y = dagger(build_a(+1, MomentumLabel::k_prime));
  CHECK(bracket(x, y) == -bracket(y, x));
  CHECK(bracket(x + z, y) == bracket(x, y) + bracket(z, y));
  const ModeExpr y2 = dagger(build_a(-1, MomentumLabel::k_prime));
  CHECK(bracket(x, y + y2) == bracket(x, y) + bracket(x, y2));
}

TEST_CASE("polarization combinations reproduce the transverse mode commutators") {
  for (int lam : {-1, +1}) {
    const ModeExpr a = build_a(lam);
    for (int mu : {-1, +1}) {
      const ModeExpr adag = dagger(build_a(mu, MomentumLabel::k_prime));
      const DeltaExpr got = bracket(a, adag);
      CAPTURE(lam);
      CAPTURE(mu);
      if (lam == mu)
        CHECK(got == omega_delta());
      else
        CHECK(got.is_zero());
    }
    // like-species annihilators commute
    CHECK(bracket(a, build_a(lam, MomentumLabel::k_prime)).is_zero());
  }
}

TEST_CASE("the temporal-longitudinal cancellation makes the zero mode commute with its dagger") {
  const DeltaExpr d = bracket(build_a(0), dagger(build_a(0, MomentumLabel::k_prime)));
  CHECK(d.is_zero());
  // ... but the zero mode is not the zero operator: against the transverse
  // daggers it simply has no contraction either.
  CHECK(bracket(build_a(0), dagger(build_a(+1, MomentumLabel::k_prime))).is_zero());
}

TEST_CASE("the dagger is an involution that conjugates coefficients") {
  for (int lam : {-1, 0, +1}) CHECK(dagger(dagger(build_a(lam))) == build_a(lam));
  Coeff mi = coeff_i();
  mi.q = -mi.q;
  CHECK(dagger(build_b(1)) == make_generator(MomentumLabel::k, true, 1, mi));
}

TEST_CASE("frequency factors of the primed momentum collapse onto the delta") {
  Coeff c = coeff_one();
  c.omega_kp_half = 2;
  const DeltaExpr d{{c}};
  const DeltaExpr u = unify_delta(d);
  REQUIRE(u.terms.size() == 1);
  CHECK(u.terms[0].omega_k_half == 2);
  CHECK(u.terms[0].omega_kp_half == 0);
  CHECK(unify_delta(u) == u);

  // Mixed half-powers combine: sqrt(w) * sqrt(w') -> w.
  Coeff m = coeff_sqrt_omega_half(false) * coeff_sqrt_omega_half(true);
  const DeltaExpr dm = unify_delta(DeltaExpr{{m}});
  REQUIRE(dm.terms.size() == 1);
  CHECK(dm.terms[0].omega_k_half == 2);
  CHECK(dm.terms[0].omega_kp_half == 0);
}

TEST_CASE("a nonzero contraction at coincident momentum labels is refused") {
  CHECK_THROWS_AS(bracket(build_a(+1), dagger(build_a(+1))), std::invalid_argument);
  // Same label but vanishing contraction is fine; there is nothing to collapse.
  CHECK(bracket(build_a(+1), build_a(-1)).is_zero());
}

TEST_CASE("printed forms read like the algebra") {
  CHECK(to_string(build_a(+1)) ==
        "(1/2)i*sqrt(2)*w^(1/2)*c(k,1) + 1/2*sqrt(2)*w^(1/2)*c(k,2)");
  CHECK(to_string(build_b(3)) == "-i*c(k,0) + i*c(k,3)");
  const DeltaExpr d = bracket(build_a(+1), dagger(build_a(+1, MomentumLabel::k_prime)));
  CHECK(to_string(d) == "w*delta3(k - k')");
  CHECK(to_string(DeltaExpr{}) == "0");
}

TEST_CASE("the full transverse commutator table closes with zero symbolic residual") {
  const AlgebraReport rep = verify_transverse_commutators();
  CHECK(rep.entries.size() == 27);
  CHECK(rep.all_pass());
  int nonzero = 0;
  for (const auto& e : rep.entries)
    if (e.expected != "0") ++nonzero;
  // Only the two like-helicity [a, adag] rows survive.
  CHECK(nonzero == 2);
  CHECK(rep.entries[0].name == "[a(+1)(k), adag(+1)(k')]");
  CHECK(rep.entries[0].expected == "w*delta3(k - k')");
  CHECK(rep.entries[0].derived == "w*delta3(k - k')");
}

}  // TEST_SUITE
