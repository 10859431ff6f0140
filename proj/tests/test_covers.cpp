#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splinter/covers.hpp"
#include "splinter/frobmod.hpp"

using namespace splinter;
using namespace splinter::covers;
using poly::GradedPoly;
using poly::Grading;

namespace {

struct Curve {
  FieldCtx k;
  Grading g;
  GradedPoly x, y, z;
  explicit Curve(uint32_t p)
      : k(p),
        g(Grading::standard(3, {"x", "y", "z"})),
        x(GradedPoly::variable(k, g, 0)),
        y(GradedPoly::variable(k, g, 1)),
        z(GradedPoly::variable(k, g, 2)) {}
};

GradedPoly cubic_ss(Curve& c) { return c.y.mul(c.y).mul(c.z).add(c.y.mul(c.z).mul(c.z)).add(c.x.pow(3)); }
GradedPoly cubic_ord(Curve& c) {
  return c.y.mul(c.y).mul(c.z).add(c.x.mul(c.y).mul(c.z)).add(c.x.pow(3)).add(c.z.pow(3));
}

}  // namespace

TEST_CASE("fraction arithmetic in the curve ring") {
  Curve c(2);
  CechSetup setup = CechSetup::plane_curve(c.k, cubic_ss(c));
  CHECK(setup.charts() == std::array<int, 2>{1, 2});
  CHECK(setup.distinguished_var() == 0);

  // x^3 = y^2 z + y z^2 in the quotient: the fraction x^3/(y z) equals y + z.
  Fraction a = setup.make_fraction(c.x.pow(3), {0, 1, 1});
  Fraction b = setup.make_fraction(c.y.add(c.z), {0, 0, 0});
  CHECK(setup.equal(a, b));
  CHECK(setup.sub(a, b).is_zero());
  Fraction sq = setup.pow_char(a, 2);
  CHECK(setup.equal(sq, setup.mul(a, a)));
}

TEST_CASE("cocycle lifts") {
  SUBCASE("zero class lifts to the zero cochain") {
    Curve c(2);
    CechSetup setup = CechSetup::plane_curve(c.k, cubic_ss(c));
    coh::CohGroup grp = coh::hyp_coh(c.k, 2, cubic_ss(c), 1, 0);
    la::Vec zero(grp.dim());
    CHECK(cocycle_lift(setup, grp, zero).overlap.is_zero());
  }
  SUBCASE("supersingular cubic: the generator lifts to x^2/(yz)") {
    Curve c(2);
    CechSetup setup = CechSetup::plane_curve(c.k, cubic_ss(c));
    coh::CohGroup grp = coh::hyp_coh(c.k, 2, cubic_ss(c), 1, 0);
    REQUIRE(grp.dim() == 1);
    la::Vec cls(1);
    cls[0] = c.k.one();
    Cochain1 m = cocycle_lift(setup, grp, cls);
    Fraction expect = setup.make_fraction(c.x.mul(c.x), {0, 1, 1});
    CHECK(setup.equal(m.overlap, expect));
  }
  SUBCASE("punctured plane: monomial classes are their own representatives") {
    FieldCtx k(2);
    CechSetup setup = CechSetup::punctured_plane(k);
    coh::LocalCohTable tab = coh::LocalCohTable::punctured_plane(k, -4, -1);
    const coh::CohGroup& grp = tab.piece(-2);
    REQUIRE(grp.dim() == 1);
    la::Vec cls(1);
    cls[0] = k.one();
    Cochain1 m = cocycle_lift(setup, grp, cls);
    Grading g2 = Grading::standard(2, {"x", "y"});
    GradedPoly one = GradedPoly::monomial(k, g2, {0, 0}, k.one());
    CHECK(setup.equal(m.overlap, setup.make_fraction(one, {1, 1})));
  }
}

TEST_CASE("coboundary solving") {
  Curve c(2);
  CechSetup setup = CechSetup::plane_curve(c.k, cubic_ss(c));
  // w = x^4/(y^2 z^2) = x/z + x/y in the curve ring.
  Fraction w = setup.make_fraction(c.x.pow(4), {0, 2, 2});
  auto sol = solve_coboundary(setup, w);
  REQUIRE(sol.has_value());
  Fraction diff = setup.sub(sol->on_chart[1], sol->on_chart[0]);
  CHECK(setup.equal(diff, w));

  SUBCASE("a class that is not a coboundary is refused") {
    coh::CohGroup grp = coh::hyp_coh(c.k, 2, cubic_ss(c), 1, 0);
    la::Vec cls(1);
    cls[0] = c.k.one();
    Cochain1 m = cocycle_lift(setup, grp, cls);
    CHECK_FALSE(solve_coboundary(setup, m.overlap).has_value());
  }
}

TEST_CASE("supersingular cover pipeline: purely inseparable adjunction kills the class") {
  Curve c(2);
  GradedPoly h = cubic_ss(c);
  CechSetup setup = CechSetup::plane_curve(c.k, h);
  coh::CohGroup grp = coh::hyp_coh(c.k, 2, h, 1, 0);
  la::Vec cls(1);
  cls[0] = c.k.one();

  // Minimal annihilator from the Frobenius action: X^2.
  frob::SemilinearOp F(c.k, coh::hyp_frobenius(c.k, 2, h, 1, 0, 1));
  gf::PPolynomial g = frob::min_p_poly(F, cls);
  CHECK(g.height == 1);
  CHECK(c.k.is_zero(g.lower[0]));

  Cochain1 m = cocycle_lift(setup, grp, cls);
  Fraction gm = setup.eval_additive(g, m.overlap);
  auto n = solve_coboundary(setup, gm);
  REQUIRE(n.has_value());

  CoverTower tower = build_cover_tower(setup, m, g, *n);
  CHECK(tower.corrected_cochain_annihilated());
  CHECK_FALSE(tower.trivial());

  auto res = verify_class_killed(tower);
  REQUIRE(std::holds_alternative<CoboundaryWitness>(res));
  const auto& w = std::get<CoboundaryWitness>(res);
  CHECK(w.identity_verified);
  CHECK(w.component_consistent);
  CHECK(w.roots == std::vector<std::string>{"0"});  // X^2 is purely inseparable

  SUBCASE("determinism: rebuilding gives byte-identical presentations") {
    CoverTower again = build_cover_tower(setup, m, g, *n);
    CHECK(again.presentation() == tower.presentation());
  }
}

TEST_CASE("ordinary cover pipeline: Artin-Schreier adjunction") {
  Curve c(2);
  GradedPoly h = cubic_ord(c);
  CechSetup setup = CechSetup::plane_curve(c.k, h);
  coh::CohGroup grp = coh::hyp_coh(c.k, 2, h, 1, 0);
  la::Vec cls(1);
  cls[0] = c.k.one();

  frob::SemilinearOp F(c.k, coh::hyp_frobenius(c.k, 2, h, 1, 0, 1));
  gf::PPolynomial g = frob::min_p_poly(F, cls);
  CHECK(g.height == 1);
  CHECK(c.k.is_one(g.lower[0]));  // X^2 + X over F_2

  Cochain1 m = cocycle_lift(setup, grp, cls);
  Fraction gm = setup.eval_additive(g, m.overlap);
  auto n = solve_coboundary(setup, gm);
  REQUIRE(n.has_value());
  CoverTower tower = build_cover_tower(setup, m, g, *n);
  auto res = verify_class_killed(tower);
  REQUIRE(std::holds_alternative<CoboundaryWitness>(res));
  CHECK(std::get<CoboundaryWitness>(res).identity_verified);
  // X^2 + X has the full prime field as roots.
  CHECK(std::get<CoboundaryWitness>(res).roots.size() == 2);
}

TEST_CASE("identity failure when the bounding cochain is wrong") {
  Curve c(2);
  GradedPoly h = cubic_ss(c);
  CechSetup setup = CechSetup::plane_curve(c.k, h);
  coh::CohGroup grp = coh::hyp_coh(c.k, 2, h, 1, 0);
  la::Vec cls(1);
  cls[0] = c.k.one();
  Cochain1 m = cocycle_lift(setup, grp, cls);
  gf::PPolynomial g = gf::ppoly_x_to_p(c.k);
  Cochain0 wrong{{setup.zero_fraction(), setup.make_fraction(c.x, {0, 0, 1})}};
  CHECK_THROWS_AS(build_cover_tower(setup, m, g, wrong), Error);
}

TEST_CASE("zero class gives the empty tower and the zero witness") {
  Curve c(2);
  CechSetup setup = CechSetup::plane_curve(c.k, cubic_ss(c));
  Cochain1 m{setup.zero_fraction()};
  Cochain0 n{{setup.zero_fraction(), setup.zero_fraction()}};
  CoverTower tower = build_cover_tower(setup, m, gf::ppoly_x_to_p(c.k), n);
  CHECK(tower.trivial());
  auto res = verify_class_killed(tower);
  REQUIRE(std::holds_alternative<CoboundaryWitness>(res));
  CHECK(std::get<CoboundaryWitness>(res).identity_verified);
}
