#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "arborslope/edgepath.hpp"

using namespace arborslope;

namespace {

std::vector<Fraction> run_to(std::vector<Fraction> v, std::int64_t top) {
  for (std::int64_t m = v.back().num() + 1; m <= top; ++m) v.emplace_back(m);
  return v;
}

bool has_violation(const Edgepath& p, Property prop, int index) {
  const auto v = validate(p);
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.property == prop && x.index == index; });
}

}  // namespace

TEST_CASE("validate accepts paths and names violations", "[edgepath]") {
  CHECK(is_valid(Edgepath::path({Fraction(-1, 2), Fraction(0)})));
  const Edgepath retrace = Edgepath::path({Fraction(1, 3), Fraction(1, 2), Fraction(1, 3)});
  CHECK(has_violation(retrace, Property::E2, 2));
  CHECK(has_violation(Edgepath::path({Fraction(0), Fraction(1, 2)}), Property::E4, 1));
  // two sides of the triangle <1/2>, <0>, <1>
  CHECK(has_violation(Edgepath::path({Fraction(1, 2), Fraction(0), Fraction(1)}), Property::E2, 2));
  CHECK(has_violation(Edgepath::path({Fraction(1, 3), Fraction(1)}), Property::Adjacency, 1));
  CHECK(is_valid(Edgepath::path(run_to({Fraction(1, 3), Fraction(1, 2), Fraction(1)}, 6))));
  CHECK(is_valid(Edgepath::constant(Fraction(-1, 2), {1, 5, -3, 0, false})));
  CHECK_FALSE(is_valid(Edgepath::constant(Fraction(-1, 2), {1, 5, -2, 0, false})));  // off the horizontal line
  CHECK_FALSE(is_valid(Edgepath::constant(Fraction(-1, 3), {3, 0, -1, 0, false})));  // left of the vertex
}

TEST_CASE("endpoint states", "[edgepath]") {
  const Edgepath p = Edgepath::path(run_to({Fraction(1, 3), Fraction(1, 2), Fraction(1)}, 6));
  CHECK(endpoint_state(p) == WeightState{1, 0, 6, 0, false});
  CHECK(endpoint_state(Edgepath::constant(Fraction(-1, 2), {1, 5, -3, 0, false})) == WeightState{1, 5, -3, 0, false});
  CHECK(endpoint_state(Edgepath::path({Fraction(-1, 2), Fraction(0)})) == WeightState{1, 0, 0, 0, false});
  CHECK(endpoint_state(Edgepath::path({Fraction(1, 2), Fraction(0)}, 1, 3)) == WeightState{3, 0, 0, 0, false});
  try {
    endpoint_state(Edgepath::path({Fraction(1, 2), Fraction(0)}, Fraction(1, 3)));
    FAIL("expected FractionalEndpoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FractionalEndpoint);
  }
  // a third of the way from <1/2> toward <0>: 2 sheets of (1,1,1) and one of (1,0,0)
  CHECK(endpoint_weights(Edgepath::path({Fraction(1, 2), Fraction(0)}, Fraction(1, 3))) == WeightState{3, 2, 2, 0, false});
}

TEST_CASE("tau counts edges with the final edge fractional", "[edgepath]") {
  CHECK(tau(Edgepath::constant(Fraction(-1, 2), {1, 5, -3, 0, false})) == Fraction(0));
  CHECK(tau(Edgepath::path({Fraction(-1, 2), Fraction(0)})) == Fraction(-2));
  CHECK(tau(Edgepath::path(run_to({Fraction(1, 3), Fraction(1, 2), Fraction(1)}, 6))) == Fraction(-14));
  CHECK(tau(Edgepath::path({Fraction(1, 3), Fraction(0)}, Fraction(1, 4))) == Fraction(1, 2));
  CHECK(tau(Edgepath::path({Fraction(1, 7)})) == Fraction(0));
}

TEST_CASE("tau is antisymmetric under mirroring and additive under concatenation", "[edgepath]") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> p(-20, 20), q(2, 12), run(-4, 4);
  for (int i = 0; i < 300; ++i) {
    const Fraction x(p(rng), q(rng));
    for (const auto& prefix : minimal_prefixes(x)) {
      const PathFamily f = make_family(prefix);
      if (!prefix.back().is_integer()) continue;
      const auto e = f.extended_to(f.arrival() + run(rng));
      if (!e) continue;
      CHECK(is_valid(*e));
      CHECK(tau(e->mirrored()) == -tau(*e));
      for (std::size_t cut = 1; cut + 1 < e->vertices.size(); ++cut) {
        const std::vector<Fraction> head(e->vertices.begin(), e->vertices.begin() + static_cast<long>(cut) + 1);
        const std::vector<Fraction> tail(e->vertices.begin() + static_cast<long>(cut), e->vertices.end());
        CHECK(tau(Edgepath::path(head)) + tau(Edgepath::path(tail)) == tau(*e));
      }
    }
  }
}

TEST_CASE("enumerate_paths examples", "[edgepath]") {
  const auto half = enumerate_paths(Fraction(-1, 2), true, 1);
  std::vector<Edgepath> concrete;
  for (const auto& f : half.paths)
    for (std::int64_t m = -1; m <= 1; ++m)
      if (auto e = f.extended_to(m)) concrete.push_back(*e);
  auto contains = [&](const std::vector<Fraction>& v) {
    return std::any_of(concrete.begin(), concrete.end(), [&](const Edgepath& e) { return e.vertices == v; });
  };
  CHECK(contains({Fraction(-1, 2), Fraction(0)}));
  CHECK(contains({Fraction(-1, 2), Fraction(-1)}));
  CHECK_FALSE(contains({Fraction(-1, 2), Fraction(0), Fraction(-1)}));  // two sides of one triangle

  const auto third = enumerate_paths(Fraction(1, 3), true, 6);
  bool found = false;
  for (const auto& f : third.paths)
    if (auto e = f.extended_to(6)) found = found || e->vertices == run_to({Fraction(1, 3), Fraction(1, 2), Fraction(1)}, 6);
  CHECK(found);

  const auto zero = enumerate_paths(Fraction(0), true, 5);
  REQUIRE(zero.paths.size() == 1);
  CHECK(zero.paths[0].prefix.vertices == std::vector<Fraction>{Fraction(0)});
}

TEST_CASE("every enumerated path and constant is valid", "[edgepath]") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> p(-15, 15), q(1, 10);
  for (int i = 0; i < 200; ++i) {
    const Fraction x(p(rng), q(rng));
    if (x.is_zero()) continue;
    const auto fam = enumerate_paths(x, true, 6, 3);
    for (const auto& f : fam.paths) {
      CHECK(is_valid(f.prefix));
      for (std::int64_t m = -6; m <= 6; ++m)
        if (auto e = f.extended_to(m)) CHECK(is_valid(*e));
    }
    for (const auto& c : fam.constants) {
      CHECK(is_valid(c));
      CHECK(tau(c) == Fraction(0));
      CHECK(uv_coords(c.point).v == x);
    }
  }
}

TEST_CASE("enumeration order is deterministic", "[edgepath]") {
  const auto a = enumerate_paths(Fraction(5, 13), true, 10, 2);
  const auto b = enumerate_paths(Fraction(5, 13), true, 10, 2);
  REQUIRE(a.paths.size() == b.paths.size());
  for (std::size_t i = 0; i < a.paths.size(); ++i) CHECK(a.paths[i].prefix == b.paths[i].prefix);
  CHECK(a.constants == b.constants);
}
