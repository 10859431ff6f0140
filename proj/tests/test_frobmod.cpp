#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splinter/frobmod.hpp"

using namespace splinter;
using namespace splinter::frob;
using poly::GradedPoly;
using poly::Grading;

namespace {

la::Mat mat(const FieldCtx& k, std::vector<std::vector<int>> rows) {
  la::Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = k.from_int(rows[i][j]);
  return m;
}

la::Vec vec(const FieldCtx& k, std::vector<int> v) {
  la::Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = k.from_int(v[i]);
  return out;
}

struct P2 {
  FieldCtx k;
  Grading g;
  GradedPoly x, y, z;
  explicit P2(uint32_t p)
      : k(p),
        g(Grading::standard(3, {"x", "y", "z"})),
        x(GradedPoly::variable(k, g, 0)),
        y(GradedPoly::variable(k, g, 1)),
        z(GradedPoly::variable(k, g, 2)) {}
};

}  // namespace

TEST_CASE("orbit spans") {
  FieldCtx f2(2);
  SUBCASE("zero operator fixes the line through v") {
    SemilinearOp F(f2, mat(f2, {{0, 0}, {0, 0}}));
    CHECK(orbit_span(F, vec(f2, {1, 0})).size() == 1);
  }
  SUBCASE("identity over the prime field fixes coordinates") {
    SemilinearOp F(f2, mat(f2, {{1, 0}, {0, 1}}));
    CHECK(orbit_span(F, vec(f2, {1, 0})).size() == 1);
  }
  SUBCASE("shift operator produces a two-step orbit") {
    SemilinearOp F(f2, mat(f2, {{0, 0}, {1, 0}}));  // e1 -> e2 -> 0
    auto basis = orbit_span(F, vec(f2, {1, 0}));
    CHECK(basis.size() == 2);
  }
  SUBCASE("orbit spans are F-stable") {
    std::mt19937 rng(5);
    FieldCtx f3(3);
    for (int trial = 0; trial < 50; ++trial) {
      la::Mat m(3, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = f3.from_int(rng() % 3);
      SemilinearOp F(f3, m);
      la::Vec v = vec(f3, {int(rng() % 3), int(rng() % 3), int(rng() % 3)});
      if (la::vec_is_zero(v)) continue;
      auto basis = orbit_span(F, v);
      la::RowSpace space(f3, 3);
      for (const auto& b : basis) space.insert(b);
      for (const auto& b : basis) CHECK(space.contains(F.apply(b)));
    }
  }
}

TEST_CASE("minimal additive annihilators") {
  FieldCtx f2(2);
  SUBCASE("zero operator gives X^p") {
    SemilinearOp F(f2, mat(f2, {{0}}));
    PPolynomial g = min_p_poly(F, vec(f2, {1}));
    CHECK(g.height == 1);
    CHECK(f2.is_zero(g.lower[0]));
  }
  SUBCASE("identity on the prime field gives X^p - X") {
    FieldCtx f3(3);
    SemilinearOp F(f3, mat(f3, {{1}}));
    PPolynomial g = min_p_poly(F, vec(f3, {1}));
    CHECK(g.height == 1);
    CHECK(g.lower[0] == f3.from_int(-1));
  }
  SUBCASE("shift operator gives X^(p^2)") {
    SemilinearOp F(f2, mat(f2, {{0, 0}, {1, 0}}));
    PPolynomial g = min_p_poly(F, vec(f2, {1, 0}));
    CHECK(g.height == 2);
    CHECK(f2.is_zero(g.lower[0]));
    CHECK(f2.is_zero(g.lower[1]));
  }
  SUBCASE("the returned polynomial annihilates and is height-minimal") {
    std::mt19937 rng(17);
    FieldCtx f3(3);
    for (int trial = 0; trial < 60; ++trial) {
      la::Mat m(3, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = f3.from_int(rng() % 3);
      SemilinearOp F(f3, m);
      la::Vec v = vec(f3, {1, int(rng() % 3), int(rng() % 3)});
      PPolynomial g = min_p_poly(F, v);
      // Annihilation, re-evaluated independently.
      la::Vec acc = v;
      for (int i = 0; i < g.height; ++i) acc = F.apply(acc);
      la::Vec it = v;
      for (int i = 0; i < g.height; ++i) {
        acc = la::vec_add(f3, acc, la::vec_scale(f3, g.lower[i], it));
        it = F.apply(it);
      }
      CHECK(la::vec_is_zero(acc));
      // Minimality: iterates below the height are independent.
      std::vector<la::Vec> iters = {v};
      for (int i = 1; i < g.height; ++i) iters.push_back(F.apply(iters.back()));
      la::RowSpace space(f3, 3);
      for (const auto& w : iters) CHECK(space.insert(w));
    }
  }
}

TEST_CASE("brute force simplicity") {
  FieldCtx f2(2);
  CHECK(brute_force_f_simple(SemilinearOp(f2, mat(f2, {{1}}))));
  CHECK_FALSE(brute_force_f_simple(SemilinearOp(f2, mat(f2, {{1, 0}, {0, 1}}))));
  CHECK(brute_force_f_simple(SemilinearOp(f2, mat(f2, {{0, 1}, {1, 1}}))));
  SUBCASE("budget enforcement") {
    FieldCtx f5(5);
    SemilinearOp big(f5, la::Mat::identity(f5, 10));
    CHECK_THROWS_AS(brute_force_f_simple(big, 1000), Error);
  }
  SUBCASE("verdict is invariant under semilinear base change") {
    std::mt19937 rng(23);
    FieldCtx f3(3);
    for (int trial = 0; trial < 40; ++trial) {
      la::Mat m(2, 2);
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m.at(i, j) = f3.from_int(rng() % 3);
      bool base = brute_force_f_simple(SemilinearOp(f3, m));
      // Random invertible Q; conjugate M -> Q^{-1} M Q^{[p]}.
      la::Mat q(2, 2);
      do {
        for (size_t i = 0; i < 2; ++i)
          for (size_t j = 0; j < 2; ++j) q.at(i, j) = f3.from_int(rng() % 3);
      } while (la::rank(f3, q) != 2);
      la::Mat qp(2, 2);
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) qp.at(i, j) = f3.pow(q.at(i, j), 3);
      // Invert q by solving against unit vectors.
      la::Mat qinv(2, 2);
      for (size_t col = 0; col < 2; ++col) {
        la::Vec e(2);
        e[col] = f3.one();
        auto sol = la::solve(f3, q, e);
        REQUIRE(sol);
        for (size_t i = 0; i < 2; ++i) qinv.at(i, col) = (*sol)[i];
      }
      la::Mat conj = qinv.mul(f3, m.mul(f3, qp));
      CHECK(brute_force_f_simple(SemilinearOp(f3, conj)) == base);
    }
  }
}

TEST_CASE("graded report certifies the quadric cone window") {
  for (uint32_t p : {3u, 5u}) {
    CAPTURE(p);
    P2 a(p);
    GradedPoly h = a.x.mul(a.x).add(a.y.mul(a.y)).add(a.z.mul(a.z));
    LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, -9, -1);
    auto report = graded_simplicity_report(tab);
    for (const auto& [t, cert] : report) {
      CAPTURE(t);
      CHECK(cert.verdict == Certificate::Verdict::Certified);
    }
  }
}

TEST_CASE("graded report finds the witnesses of the quartic cone") {
  P2 a(2);
  GradedPoly h = a.x.pow(3).mul(a.y).add(a.y.pow(3).mul(a.z)).add(a.z.pow(3).mul(a.x));
  LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, 0, 3);
  auto report = graded_simplicity_report(tab);
  // The canonical twist sits in degree d - 3 = 1 and is killed by Frobenius.
  REQUIRE(report.count(1));
  CHECK(report.at(1).verdict == Certificate::Verdict::NotSimple);
  CHECK(report.at(1).witness_degree == 1);
  // Zero pieces are vacuously fine.
  CHECK(report.at(2).verdict == Certificate::Verdict::Certified);
  CHECK(report.at(3).verdict == Certificate::Verdict::Certified);
}

TEST_CASE("width-one windows are inconclusive") {
  P2 a(3);
  GradedPoly h = a.x.mul(a.x).add(a.y.mul(a.y)).add(a.z.mul(a.z));
  LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, -2, -2);
  auto report = graded_simplicity_report(tab);
  CHECK(report.at(-2).verdict == Certificate::Verdict::Inconclusive);
}

TEST_CASE("frobenius maps respect the degree scaling on every table") {
  P2 a(3);
  GradedPoly h = a.x.mul(a.x).add(a.y.mul(a.y)).add(a.z.mul(a.z));
  LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, -9, -1);
  for (int t = -9; t <= -1; ++t) {
    const la::Mat* f = tab.frob(t);
    if (!f) continue;
    CHECK(f->cols() == tab.piece_dim(t));
    CHECK(f->rows() == tab.piece_dim(3 * t));
  }
}

TEST_CASE("graded annihilator search") {
  SUBCASE("punctured plane classes have no annihilator within bound") {
    FieldCtx k(2);
    LocalCohTable tab = LocalCohTable::punctured_plane(k, -32, -1);
    la::Vec cls(tab.piece_dim(-2));
    cls[0] = k.one();
    auto res = graded_min_p_poly(tab, -2, cls, 4);
    CHECK(std::holds_alternative<NoneWithinBound>(res));
  }
  SUBCASE("supersingular elliptic cone class is killed at the first step") {
    P2 a(2);
    GradedPoly h = a.y.mul(a.y).mul(a.z).add(a.y.mul(a.z).mul(a.z)).add(a.x.pow(3));
    LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, -3, 0);
    la::Vec cls(tab.piece_dim(0));
    cls[0] = a.k.one();
    auto res = graded_min_p_poly(tab, 0, cls, 1);
    REQUIRE(std::holds_alternative<PPolynomial>(res));
    PPolynomial g = std::get<PPolynomial>(res);
    CHECK(g.height == 1);
    CHECK(a.k.is_zero(g.lower[0]));
  }
  SUBCASE("ordinary elliptic cone class needs the Artin-Schreier term") {
    P2 a(2);
    GradedPoly h =
        a.y.mul(a.y).mul(a.z).add(a.x.mul(a.y).mul(a.z)).add(a.x.pow(3)).add(a.z.pow(3));
    LocalCohTable tab = LocalCohTable::plane_curve_cone(a.k, h, -3, 0);
    la::Vec cls(tab.piece_dim(0));
    cls[0] = a.k.one();
    auto res = graded_min_p_poly(tab, 0, cls, 2);
    REQUIRE(std::holds_alternative<PPolynomial>(res));
    PPolynomial g = std::get<PPolynomial>(res);
    CHECK(g.height == 1);
    CHECK_FALSE(a.k.is_zero(g.lower[0]));  // X^2 - c X with c the unit Hasse invariant
  }
  SUBCASE("zero class gets the trivial annihilator") {
    FieldCtx k(2);
    LocalCohTable tab = LocalCohTable::punctured_plane(k, -8, -1);
    la::Vec cls(tab.piece_dim(-2));
    auto res = graded_min_p_poly(tab, -2, cls, 4);
    REQUIRE(std::holds_alternative<PPolynomial>(res));
    CHECK(std::get<PPolynomial>(res).height == 1);
  }
  SUBCASE("window too small to iterate") {
    FieldCtx k(2);
    LocalCohTable tab = LocalCohTable::punctured_plane(k, -8, -1);
    la::Vec cls(tab.piece_dim(-2));
    cls[0] = k.one();
    CHECK_THROWS_AS(graded_min_p_poly(tab, -2, cls, 4), Error);
  }
}
