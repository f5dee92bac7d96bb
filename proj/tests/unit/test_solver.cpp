#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "arborslope/parser.hpp"
#include "arborslope/solver.hpp"

using namespace arborslope;

namespace {

bool contains(const std::vector<Fraction>& v, Fraction x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<Fraction> negated(std::vector<Fraction> v) {
  for (auto& x : v) x = -x;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Fraction> fractions(std::initializer_list<const char*> texts) {
  std::vector<Fraction> out;
  for (const char* t : texts) out.push_back(Fraction::parse(t));
  return out;
}

}  // namespace

TEST_CASE("K_2 and K_3 slopes", "[solver]") {
  const SlopeReport r2 = solve_sn(kn(2), {6, 4});
  CHECK(contains(r2.slopes, Fraction(-14)));
  CHECK(contains(r2.slopes, Fraction(14)));
  REQUIRE(r2.diameter);
  CHECK(*r2.diameter >= Fraction(28));
  CHECK(r2.certified == fractions({"-14", "14"}));

  const SlopeReport r3 = solve_sn(kn(3), {12, 4});
  CHECK(contains(r3.slopes, Fraction(-28)));
  CHECK(contains(r3.slopes, Fraction(28)));
  CHECK(*r3.diameter >= Fraction(56));
}

TEST_CASE("mirror of K_2 has the negated slope set", "[solver]") {
  const SlopeReport r = solve_sn(kn(2));
  const SlopeReport m = solve_sn(mirror(kn(2)));
  CHECK(m.slopes == negated(r.slopes));
}

TEST_CASE("the distinguished system is found by the search", "[solver]") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    const CandidateSystem k = kn_system(n);
    const SlopeReport r = solve_sn(kn(n), {n * n + n, 4});
    const bool found = std::any_of(r.systems.begin(), r.systems.end(), [&](const CandidateSystem& s) {
      return !s.via_achirality && s.assignment == k.assignment;
    });
    CHECK(found);
  }
}

TEST_CASE("kn_system trace", "[solver]") {
  for (std::int64_t n = 2; n <= 8; ++n)
    for (const auto& c : kn_trace(n)) {
      INFO("n=" << n << " " << c.name << ": expected " << c.expected << ", got " << c.actual);
      CHECK(c.ok);
    }
  CHECK(*kn_system(5).slope == Fraction(-68));
  const CandidateSystem s = kn_system(2);
  CHECK(s.transforms.back()->state == WeightState{1, 0, -6});
  CHECK_THROWS_AS(kn_system(1), Error);
}

TEST_CASE("every emitted system is sound", "[solver]") {
  for (const char* text : {"(-1/2 + 1/3) o (-1/2 + 1/3)", "(1/2 + 1/3 + -1/5) o (2/3 + -1/4)",
                           "(-1/2 + 1/3) o (-1/3 + 1/4)", "-1/2 + 1/3 + 1/7", "1/3 + 1/5 + -1/2 + 2/7",
                           "(1/2 o 1/4) + (3/4 + -1/3)"}) {
    const TangleExpr e = parse(text);
    const SlopeReport r = solve(e, default_bounds(e));
    CHECK_FALSE(r.systems.empty());
    for (const auto& s : r.systems) {
      const auto problems = check_system(s);
      INFO(text << ": " << (problems.empty() ? std::string() : problems.front()));
      CHECK(problems.empty());
      REQUIRE(s.slope);
      CHECK(contains(r.slopes, *s.slope));
    }
    for (Fraction x : r.slopes) {
      const bool realized =
          std::any_of(r.systems.begin(), r.systems.end(), [&](const CandidateSystem& s) { return s.slope == x; });
      CHECK(realized);
    }
  }
}

TEST_CASE("enlarging bounds never loses a slope", "[solver]") {
  for (const char* text : {"(-1/2 + 1/3) o (-1/2 + 1/3)", "(1/2 + 1/3 + -1/5) o (2/3 + -1/4)", "-1/2 + 1/3 + 1/7"}) {
    const TangleExpr e = parse(text);
    std::vector<Fraction> previous;
    for (std::int64_t c : {2, 4, 8, 16}) {
      for (std::int64_t k : {1, 2, 4}) {
        const SlopeReport small = solve(e, {c, k});
        const SlopeReport larger = solve(e, {c * 2, k});
        const SlopeReport wider = solve(e, {c, k + 1});
        for (Fraction x : small.slopes) {
          CHECK(contains(larger.slopes, x));
          CHECK(contains(wider.slopes, x));
        }
      }
    }
  }
}

TEST_CASE("per-slope cap", "[solver]") {
  const SlopeReport r = solve_sn(kn(3));
  for (Fraction x : r.slopes) {
    const auto n = std::count_if(r.systems.begin(), r.systems.end(), [&](const CandidateSystem& s) { return s.slope == x; });
    CHECK(n >= 1);
    CHECK(static_cast<std::size_t>(n) <= kPerSlopeCap);
  }
}

TEST_CASE("unnormalizable expressions give an empty slope list with a diagnostic", "[solver]") {
  const SlopeReport r = solve(parse("1/3 o 1/5"), {8, 2});
  CHECK(r.slopes.empty());
  CHECK_FALSE(r.diameter);
  CHECK_FALSE(r.ratio);
  const bool said = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](const std::string& d) {
    return d.find("slope normalization unavailable") != std::string::npos;
  });
  CHECK(said);
}

TEST_CASE("montesinos candidates of N(-1/2 + 1/3 + 1/7)", "[solver]") {
  const TangleExpr e = parse("-1/2 + 1/3 + 1/7");
  const SlopeReport r = solve_montesinos(e, 32);
  // Frozen from tests/oracle/montesinos_reference.py (tau values shifted by the Seifert twist -18).
  CHECK(r.slopes == fractions({"6", "8", "10", "16", "18", "37/2", "20", "22"}));
  std::vector<Fraction> interior;
  for (const auto& s : r.systems) {
    REQUIRE(s.u);
    if (!s.u->is_zero()) interior.push_back(*s.u);
    // vertical coordinates of the endpoints add to zero on the common line
    Fraction total(0);
    for (const auto& p : s.assignment) {
      const DiagramPoint pt = endpoint_point(p);
      CHECK(pt.u == *s.u);
      total += pt.v;
    }
    CHECK(total == Fraction(0));
  }
  std::sort(interior.begin(), interior.end());
  CHECK(interior == fractions({"3/5", "5/6"}));
  const SlopeReport m = solve_montesinos(mirror(e), 32);
  CHECK(m.slopes == negated(r.slopes));
}

TEST_CASE("montesinos shape checks", "[solver]") {
  try {
    solve_montesinos(parse("1/2 + 1/3"), 8);
    FAIL("expected UnsupportedShape");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedShape);
  }
  CHECK_THROWS_AS(solve_montesinos(kn(2), 8), Error);
  CHECK_THROWS_AS(solve_sn(parse("1/2 + 1/3 + 1/5"), {8, 2}), Error);
}

TEST_CASE("diameter and ratio", "[solver]") {
  const SlopeReport r2 = solve_sn(kn(2));
  CHECK(r2.crossings == 8);
  CHECK(r2.crossing_source == CrossingSource::FamilyExact);
  CHECK(*r2.diameter == Fraction(28));
  CHECK(*r2.ratio == Fraction(7, 2));

  const SlopeReport r4 = solve_sn(kn(4));
  CHECK(r4.crossings == 16);
  CHECK(*r4.diameter >= Fraction(92));
  CHECK(*r4.ratio >= Fraction(23, 4));

  CandidateSystem single = kn_system(2);
  const SlopeReport one = report(kn(2), {single}, default_bounds(kn(2)));
  CHECK(*one.diameter == Fraction(0));

  const SlopeReport none = report(parse("1/2 + 1/3 + 1/5"), {}, {8, 1});
  CHECK_FALSE(none.diameter);
  CHECK_FALSE(none.ratio);
  CHECK(none.crossing_source == CrossingSource::DiagramCount);
}

TEST_CASE("default bounds", "[solver]") {
  CHECK(default_bounds(kn(2)).c_bound == 8);
  CHECK(default_bounds(kn(8)).c_bound == 74);
  CHECK(default_bounds(mirror(kn(3))).c_bound == 14);
  CHECK(default_bounds(parse("1/2 + 1/3 + 1/5")).c_bound == 32);
  CHECK(default_bounds(kn(2)).scale_bound == 4);
}

TEST_CASE("solving is deterministic", "[solver]") {
  const TangleExpr e = parse("(1/2 + 1/3 + -1/5) o (2/3 + -1/4)");
  const SlopeReport a = solve(e, default_bounds(e)), b = solve(e, default_bounds(e));
  CHECK(a.slopes == b.slopes);
  REQUIRE(a.systems.size() == b.systems.size());
  for (std::size_t i = 0; i < a.systems.size(); ++i) CHECK(a.systems[i].assignment == b.systems[i].assignment);
}
