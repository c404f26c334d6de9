#include <doctest.h>

#include <algorithm>
#include <random>

#include "fermat/equation.hpp"

using namespace fermat;

namespace {

bool has_violation(const std::vector<Violation>& vs, Errc code, const std::string& subject) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.code == code && v.subject == subject;
  });
}

} // namespace

TEST_CASE("validate accepts the worked coefficient sets") {
  CHECK_NOTHROW(FermatEquation::validated(2, 9, 11, 5));
  CHECK_NOTHROW(FermatEquation::validated(16, 9, 7, 5));
  CHECK_NOTHROW(FermatEquation::validated(123, 125, 121, 5));
  CHECK_NOTHROW(FermatEquation::validated(-2, 9, 11, 5));  // signs are fine
}

TEST_CASE("validate rejects with named violations") {
  CHECK(has_violation(check_equation(2, 9, 11, 4), Errc::non_prime_exponent, "p"));
  CHECK(has_violation(check_equation(2, 9, 11, 3), Errc::non_prime_exponent, "p"));
  CHECK(has_violation(check_equation(2, 4, 11, 5), Errc::not_coprime, "A,B"));
  CHECK(has_violation(check_equation(32, 9, 11, 5), Errc::not_power_free, "A"));
  CHECK(has_violation(check_equation(2, 0, 11, 5), Errc::zero_coefficient, "B"));
  CHECK(check_equation(2, 9, 11, 5).empty());

  // Several constraints can fail at once; every violation is reported.
  auto vs = check_equation(32, 4, 11, 4);
  CHECK(has_violation(vs, Errc::non_prime_exponent, "p"));
  CHECK(has_violation(vs, Errc::not_coprime, "A,B"));
  CHECK(has_violation(vs, Errc::not_power_free, "A"));

  CHECK_THROWS_AS(FermatEquation::validated(2, 4, 11, 5), ValidationError);
  try {
    FermatEquation::validated(32, 4, 11, 4);
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() >= 3);
  }
}

TEST_CASE("unchecked skips validation for exploratory equations") {
  auto eq = FermatEquation::unchecked(7, 32, -1, 5);
  CHECK(eq.B == 32);
}

TEST_CASE("evaluate is exact") {
  auto ex2 = FermatEquation::validated(2, 9, 11, 5);
  auto ex3 = FermatEquation::validated(16, 9, 7, 5);
  CHECK(evaluate(ex2, {1, 1, -1}) == 0);
  CHECK(evaluate(ex3, {1, -1, -1}) == 0);
  CHECK(evaluate(ex2, {1, 1, 1}) == 22);
  CHECK(evaluate(ex2, {BigInt("1000000007"), 1, 1}) ==
        2 * pow_ui(BigInt("1000000007"), 5) + 20);
}

TEST_CASE("trivial solution iff A+B+C = 0") {
  CHECK(trivial_solution_by_sum(FermatEquation::validated(1, 2, -3, 5)) ==
        Triplet{1, 1, 1});
  auto eq = FermatEquation::validated(2, 9, -11, 5);
  auto t = trivial_solution_by_sum(eq);
  REQUIRE(t.has_value());
  CHECK(evaluate(eq, *t) == 0);
  CHECK_FALSE(trivial_solution_by_sum(FermatEquation::validated(2, 9, 11, 5)).has_value());
}

TEST_CASE("sign orbit lists all 8 variants and preserves solution-hood") {
  auto eq = FermatEquation::validated(2, 9, 11, 5);
  Triplet t{1, 1, -1};
  auto orbit = sign_orbit(eq, t);
  REQUIRE(orbit.size() == 8);

  CHECK(orbit[0].first.signs == std::array<int, 3>{1, 1, 1});
  CHECK(orbit[0].first.equation == eq);
  CHECK(orbit[0].second == t);

  for (const auto& [variant, mapped] : orbit) {
    CHECK(evaluate(variant.equation, mapped) == 0);
    // Coefficient signs move in lockstep with coordinate signs.
    CHECK(variant.equation.A == variant.signs[0] * eq.A);
    CHECK(mapped.x == variant.signs[0] * t.x);
    CHECK(mapped.y == variant.signs[1] * t.y);
    CHECK(mapped.z == variant.signs[2] * t.z);
  }

  auto minus_a = std::find_if(orbit.begin(), orbit.end(), [](const auto& pair) {
    return pair.first.signs == std::array<int, 3>{-1, 1, 1};
  });
  REQUIRE(minus_a != orbit.end());
  CHECK(minus_a->first.equation == FermatEquation::unchecked(-2, 9, 11, 5));
  CHECK(minus_a->second == Triplet{-1, 1, -1});

  auto all_minus = std::find_if(orbit.begin(), orbit.end(), [](const auto& pair) {
    return pair.first.signs == std::array<int, 3>{-1, -1, -1};
  });
  REQUIRE(all_minus != orbit.end());
  CHECK(all_minus->first.equation == FermatEquation::unchecked(-2, -9, -11, 5));
  CHECK(all_minus->second == Triplet{-1, -1, 1});
}

TEST_CASE("sign orbit rejects non-solutions") {
  auto eq = FermatEquation::validated(2, 9, 11, 5);
  CHECK_THROWS_AS(sign_orbit(eq, Triplet{1, 1, 1}), Error);
}

TEST_CASE("sign orbit soundness on randomized scaled solutions") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> scale(1, 25);
  const Triplet seeds[] = {{1, 1, -1}, {-1, 1, 1}};
  const FermatEquation eqs[] = {FermatEquation::validated(2, 9, 11, 5),
                                FermatEquation::validated(16, 9, 7, 5)};
  for (int i = 0; i < 50; ++i) {
    const auto& eq = eqs[i % 2];
    const auto& seed = seeds[i % 2];
    long lambda = scale(rng) * (i % 3 == 0 ? -1 : 1);
    Triplet t{lambda * seed.x, lambda * seed.y, lambda * seed.z};
    for (const auto& [variant, mapped] : sign_orbit(eq, t)) {
      CHECK(evaluate(variant.equation, mapped) == 0);
    }
  }
}

TEST_CASE("canonical orderings of the worked sets") {
  auto ords = canonical_orderings(2, 9, 11, 5);
  CHECK(ords[0].equation.A == 2);
  CHECK(ords[0].constant == BigRat(96059601));
  CHECK(ords[1].equation.A == 9);
  CHECK(ords[1].constant == BigRat(4743684));  // 81 * 22^4 / 4
  CHECK(ords[2].equation.A == 11);
  CHECK(ords[2].constant == BigRat(3175524));  // 121 * 18^4 / 4

  for (const auto& set : {std::array<long, 3>{2, 9, 11}, std::array<long, 3>{16, 9, 7},
                          std::array<long, 3>{123, 125, 121}}) {
    auto o = canonical_orderings(set[0], set[1], set[2], 5);
    CHECK(o[0].constant != o[1].constant);
    CHECK(o[0].constant != o[2].constant);
    CHECK(o[1].constant != o[2].constant);
  }

  // Signs do not change the three curve constants.
  auto neg = canonical_orderings(-2, 9, -11, 5);
  CHECK(neg[0].constant == ords[0].constant);
  CHECK(neg[1].constant == ords[1].constant);
  CHECK(neg[2].constant == ords[2].constant);

  CHECK_THROWS_AS(canonical_orderings(2, 4, 11, 5), ValidationError);
}

TEST_CASE("triplet canonical form") {
  CHECK(Triplet{-2, -2, 2}.canonical() == Triplet{1, 1, -1});
  CHECK(Triplet{0, -3, 6}.canonical() == Triplet{0, 1, -2});
  CHECK(Triplet{4, -6, 10}.canonical() == Triplet{2, -3, 5});
  CHECK(Triplet{1, 1, -1}.canonical() == Triplet{1, 1, -1});
  CHECK(same_solution({-1, -1, 1}, {1, 1, -1}));
  CHECK(same_solution({-5, -5, 5}, {1, 1, -1}));
  CHECK_FALSE(same_solution({1, 1, -1}, {1, -1, 1}));
  CHECK(Triplet{0, -3, 6}.canonical().is_primitive());
}

TEST_CASE("degenerate zero-coordinate solutions") {
  CHECK(degenerate_zero_coordinate_solutions(FermatEquation::validated(2, 9, 11, 5)).empty());

  auto one_zero = degenerate_zero_coordinate_solutions(FermatEquation::validated(5, 1, 1, 5));
  REQUIRE(one_zero.size() == 1);
  CHECK(one_zero[0] == Triplet{0, 1, -1});
  CHECK(evaluate(FermatEquation::validated(5, 1, 1, 5), one_zero[0]) == 0);

  // 32 is not power-free, so this needs the unchecked constructor.
  auto eq = FermatEquation::unchecked(7, 32, -1, 5);
  auto sols = degenerate_zero_coordinate_solutions(eq);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == Triplet{0, 1, 2});
  CHECK(evaluate(eq, sols[0]) == 0);

  for (const auto& t : sols) CHECK(t.is_primitive());
}
