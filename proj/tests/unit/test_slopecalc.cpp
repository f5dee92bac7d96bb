#include <catch_amalgamated.hpp>

#include <random>

#include "arborslope/parser.hpp"
#include "arborslope/slopecalc.hpp"
#include "arborslope/solver.hpp"

using namespace arborslope;

namespace {

// Random Montesinos tangle with at least one even denominator.
TangleExpr random_even_montesinos(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::int64_t> num(-9, 9), den(2, 11);
  const int leaves = count(rng);
  std::uniform_int_distribution<int> which(0, leaves - 1);
  const int even_at = which(rng);
  std::optional<TangleExpr> e;
  for (int i = 0; i < leaves; ++i) {
    Fraction x;
    do {
      std::int64_t q = den(rng);
      if (i == even_at && q % 2 == 1) ++q;
      x = Fraction(num(rng), q);
    } while (x.is_zero() || (i == even_at && x.den() % 2 == 1));
    const TangleExpr leaf = TangleExpr::leaf(x);
    e = e ? TangleExpr::sum(*e, leaf) : leaf;
  }
  return *e;
}

}  // namespace

TEST_CASE("twist recursion rules", "[slopecalc]") {
  CHECK(tau_sum(-2, -14) == Fraction(-16));
  CHECK(tau_sum(0, 0) == Fraction(0));
  CHECK(tau_product(0, 2, -16) == Fraction(-14));
  CHECK(tau_product(0, 0, 0) == Fraction(0));
  CHECK(tau_product(-2, 2, 0) == Fraction(4));
}

TEST_CASE("evaluate records states, twists and transforms", "[slopecalc]") {
  const CandidateSystem s = kn_system(2);
  const TangleExpr& e = s.expr;
  const int t1 = e.node(e.root()).left, t2 = e.node(e.root()).right;
  CHECK(s.states[static_cast<std::size_t>(t1)] == WeightState{1, 5, -1});
  CHECK(s.taus[static_cast<std::size_t>(t1)] == Fraction(0));
  CHECK(s.taus[static_cast<std::size_t>(t2)] == Fraction(-16));
  CHECK(s.transforms[static_cast<std::size_t>(e.root())]->state == WeightState{1, 0, -6});
  CHECK(s.tau() == Fraction(-14));
  CHECK(s.final_state() == WeightState{1, 0, 0});
  CHECK(closes_at_zero(s));
  CHECK(check_system(s).empty());
  for (int i = 0; i < 4; ++i) CHECK(s.effective_sheets(i) == 1);
}

TEST_CASE("evaluate rejects assignments that do not glue", "[slopecalc]") {
  const TangleExpr e = parse("-1/2 + 1/3 + 1/7");
  std::vector<Edgepath> a{Edgepath::path({Fraction(-1, 2), Fraction(0)}), Edgepath::path({Fraction(1, 3)}),
                          Edgepath::path({Fraction(1, 7), Fraction(0)})};
  try {
    evaluate(e, a);
    FAIL("expected MismatchedWeights");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::MismatchedWeights);
  }
}

TEST_CASE("evaluate rescales to a common (a, b)", "[slopecalc]") {
  const TangleExpr e = parse("2/3 + -1/3");
  // (1,2,2) and (2,4,-2) both sit on u = 2/3; the first needs two sheets.
  const CandidateSystem s =
      evaluate(e, {Edgepath::path({Fraction(2, 3)}), Edgepath::constant(Fraction(-1, 3), {2, 4, -2, 0, false})});
  CHECK(s.final_state() == WeightState{2, 4, 2});
  CHECK(s.effective_sheets(0) == 2);
  CHECK(s.effective_sheets(1) == 1);
}

TEST_CASE("orientation of the numerator closure", "[slopecalc]") {
  // -1/2 + 1/3 + 1/4: two components; only the 1/3 tangle has both arcs of one class.
  const TangleExpr e = parse("-1/2 + 1/3 + 1/4");
  const auto signs = orientation_signs(e);
  REQUIRE(signs.size() == 3);
  for (const auto& s : signs) CHECK(s[NW] + s[NE] + s[SW] + s[SE] == 0);
  CHECK(forbidden_class(signs[0]) != ParityClass::Infinity);
}

TEST_CASE("seifert edgepaths avoid the forbidden class", "[slopecalc]") {
  CHECK(seifert_vertices(Fraction(1, 3), ParityClass::Zero) ==
        std::vector<Fraction>{Fraction(1, 3), Fraction(1, 2), Fraction(1)});
  CHECK(seifert_vertices(Fraction(2, 5), ParityClass::One) ==
        std::vector<Fraction>{Fraction(2, 5), Fraction(1, 2), Fraction(0)});
  CHECK_THROWS_AS(seifert_vertices(Fraction(1, 3), ParityClass::One), Error);
  CHECK(seifert_vertices(Fraction(-1, 2), ParityClass::One) == std::vector<Fraction>{Fraction(-1, 2), Fraction(0)});
  CHECK_THROWS_AS(seifert_vertices(Fraction(1, 2), ParityClass::Infinity), Error);
}

TEST_CASE("seifert twist values", "[slopecalc]") {
  for (std::int64_t n = 2; n <= 8; ++n) CHECK(seifert_tau(kn(n)) == Fraction(0));
  CHECK(seifert_tau(parse("-1/2 + 1/3 + 1/4")) == Fraction(0));
  CHECK(seifert_tau(parse("-1/2 + 1/3 + 1/7")) == Fraction(-18));
  try {
    seifert_tau(parse("1/3 + 1/5 + 1/7"));
    FAIL("expected SeifertUndefined");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SeifertUndefined);
  }
}

TEST_CASE("seifert twist is antisymmetric under mirroring", "[slopecalc]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const TangleExpr t = random_even_montesinos(rng), r = random_even_montesinos(rng);
    for (const TangleExpr& e : {t, TangleExpr::product(t, r), TangleExpr::sum(TangleExpr::product(t, r), r)}) {
      CHECK(seifert_tau(mirror(e)) == -seifert_tau(e));
    }
  }
}

TEST_CASE("component count of the closure", "[slopecalc]") {
  for (std::int64_t n = 2; n <= 8; ++n) CHECK(component_count(kn(n)) == 1);
  CHECK(component_count(parse("-1/2 + 1/3 + 1/7")) == 1);
  CHECK(component_count(parse("1/2")) == 1);
  CHECK(component_count(parse("2/3")) == 2);
  CHECK(component_count(parse("(1/2 + 1/4) o (1/2 + 1/4)")) > 1);
}

TEST_CASE("seifert twists cancel on knots that are products of a tangle with itself", "[slopecalc]") {
  std::mt19937_64 rng(29);
  int knots = 0;
  while (knots < 300) {
    const TangleExpr t = random_even_montesinos(rng);
    const TangleExpr tt = TangleExpr::product(t, t);
    if (component_count(tt) != 1) continue;
    CHECK(seifert_tau(tt) == Fraction(0));
    ++knots;
  }
}

TEST_CASE("boundary slope of the distinguished K_n systems", "[slopecalc]") {
  CHECK(boundary_slope(kn_system(2)) == Fraction(-14));
  CHECK(boundary_slope(mirror_system(kn_system(2))) == Fraction(14));
  CHECK(boundary_slope(kn_system(3)) == Fraction(-28));
  for (std::int64_t n = 2; n <= 8; ++n)
    CHECK(boundary_slope(kn_system(n)) + boundary_slope(mirror_system(kn_system(n))) == Fraction(0));
}

TEST_CASE("mirroring a system negates every twist", "[slopecalc]") {
  const CandidateSystem s = kn_system(4);
  const CandidateSystem m = mirror_system(s);
  CHECK(check_system(m).empty());
  for (std::size_t i = 0; i < s.taus.size(); ++i) CHECK(m.taus[i] == -s.taus[i]);
  for (std::size_t i = 0; i < s.transforms.size(); ++i)
    if (s.transforms[i]) CHECK(m.transforms[i]->tau_prime == -s.transforms[i]->tau_prime);
}
