#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "splinter/poly.hpp"

using namespace splinter;
using namespace splinter::poly;

namespace {

struct UV {
  FieldCtx k;
  Grading g;
  GradedPoly u, v;

  explicit UV(uint32_t p)
      : k(p),
        g(Grading::standard(2, {"u", "v"})),
        u(GradedPoly::variable(k, g, 0)),
        v(GradedPoly::variable(k, g, 1)) {}
};

}  // namespace

TEST_CASE("weighted degrees") {
  Grading g = Grading::standard(3);
  CHECK(weighted_degree({2, 0, 1}, g) == 3);
  Grading w = Grading::weighted({2, 3});
  CHECK(weighted_degree({3, 0}, w) == 6);
  CHECK_THROWS_AS(weighted_degree({1, 1}, Grading::weighted({2})), Error);
}

TEST_CASE("subalgebra piece bases for k[u^2, v^2, u^3+v^3] in char 2") {
  UV r(2);
  GradedPoly u2 = r.u.mul(r.u), v2 = r.v.mul(r.v);
  GradedPoly w = r.u.pow(3).add(r.v.pow(3));
  std::vector<GradedPoly> gens = {u2, v2, w};

  CHECK(subalgebra_piece_basis(gens, 3).dim() == 1);
  CHECK(subalgebra_piece_basis(gens, 3).basis[0] == w);
  CHECK(subalgebra_piece_basis(gens, 1).dim() == 0);
  CHECK(subalgebra_piece_basis({r.u}, 2).basis[0] == r.u.mul(r.u));

  SUBCASE("piece dimension is independent of generator order") {
    std::vector<GradedPoly> shuffled = {w, v2, u2};
    for (int d = 0; d <= 8; ++d)
      CHECK(subalgebra_piece_basis(gens, d).dim() == subalgebra_piece_basis(shuffled, d).dim());
  }
}

TEST_CASE("ideal pieces of (u^2, v^2) in the subring") {
  UV r(2);
  GradedPoly u2 = r.u.mul(r.u), v2 = r.v.mul(r.v);
  GradedPoly w = r.u.pow(3).add(r.v.pow(3));
  std::vector<GradedPoly> gens = {u2, v2, w};
  std::vector<GradedPoly> ideal = {u2, v2};

  CHECK(ideal_piece_in_subalgebra(ideal, gens, 3).dim() == 0);
  PieceBasis d4 = ideal_piece_in_subalgebra(ideal, gens, 4);
  CHECK(d4.dim() == 3);
  PieceBasis d5 = ideal_piece_in_subalgebra(ideal, gens, 5);
  CHECK(d5.dim() == 2);
}

TEST_CASE("membership decides the degree-3 obstruction in char 2") {
  UV r(2);
  GradedPoly u2 = r.u.mul(r.u), v2 = r.v.mul(r.v);
  GradedPoly w = r.u.pow(3).add(r.v.pow(3));
  std::vector<GradedPoly> gens = {u2, v2, w};
  std::vector<GradedPoly> ideal = {u2, v2};

  PieceBasis piece3 = ideal_piece_in_subalgebra(ideal, gens, 3);
  CHECK_FALSE(membership(w, piece3).member);

  PieceBasis piece4 = ideal_piece_in_subalgebra(ideal, gens, 4);
  auto res = membership(r.u.pow(4), piece4);
  REQUIRE(res.member);
  // Coordinates reconstruct the element exactly.
  GradedPoly rebuilt(r.k, r.g);
  for (size_t i = 0; i < piece4.basis.size(); ++i)
    rebuilt = rebuilt.add(piece4.basis[i].scale(res.coordinates[i]));
  CHECK(rebuilt == r.u.pow(4));

  CHECK_THROWS_AS(membership(r.u.pow(5), piece4), Error);
}

TEST_CASE("membership for the p=3 family members") {
  for (int a : {4, 5}) {
    UV r(3);
    GradedPoly up = r.u.pow(3), vp = r.v.pow(3);
    GradedPoly w = r.u.pow(a).add(r.v.pow(a));
    std::vector<GradedPoly> gens = {up, vp, w};
    PieceBasis piece = ideal_piece_in_subalgebra({up, vp}, gens, a);
    CHECK_FALSE(membership(w, piece).member);
  }
}

TEST_CASE("membership is invariant under shuffling the generator lists") {
  UV r(2);
  GradedPoly u2 = r.u.mul(r.u), v2 = r.v.mul(r.v);
  GradedPoly w = r.u.pow(3).add(r.v.pow(3));
  std::vector<GradedPoly> gens = {u2, v2, w};
  std::vector<GradedPoly> ideal = {u2, v2};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    std::shuffle(ideal.begin(), ideal.end(), rng);
    for (int d = 2; d <= 8; ++d) {
      PieceBasis piece = ideal_piece_in_subalgebra(ideal, gens, d);
      GradedPoly cand = (d % 2 == 0) ? r.u.pow(d) : r.u.pow(d - 3).mul(w);
      PieceBasis ref = ideal_piece_in_subalgebra({u2, v2}, {u2, v2, w}, d);
      CHECK(membership(cand, piece).member == membership(cand, ref).member);
    }
  }
}

TEST_CASE("hypersurface normal form") {
  FieldCtx k(2);
  Grading g = Grading::standard(3, {"x", "y", "z"});
  GradedPoly x = GradedPoly::variable(k, g, 0);
  GradedPoly y = GradedPoly::variable(k, g, 1);
  GradedPoly z = GradedPoly::variable(k, g, 2);
  GradedPoly h = z.mul(z).add(x.pow(3)).add(y.pow(3));  // z^2 + x^3 + y^3

  GradedPoly nf = normal_form_hypersurface(z.pow(4), h, 2);
  GradedPoly expected = x.pow(3).add(y.pow(3)).pow(2);
  CHECK(nf == expected);

  CHECK(normal_form_hypersurface(x, h, 2) == x);

  GradedPoly bad = x.mul(z).add(GradedPoly::monomial(k, g, {0, 0, 0}, k.one()));
  CHECK_THROWS_AS(normal_form_hypersurface(z, bad, 2), Error);

  SUBCASE("idempotence on assorted inputs") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
      GradedPoly f(k, g);
      for (int j = 0; j < 6; ++j) {
        Monomial m = {int32_t(rng() % 5), int32_t(rng() % 5), int32_t(rng() % 5)};
        f.add_term(m, k.from_int(1));
      }
      GradedPoly once = normal_form_hypersurface(f, h, 2);
      CHECK(normal_form_hypersurface(once, h, 2) == once);
    }
  }
}

TEST_CASE("budget enforcement") {
  UV r(2);
  CHECK_THROWS_AS(subalgebra_piece_basis({r.u, r.v}, 40, 10), Error);
}
