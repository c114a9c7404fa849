#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/random.hpp"

using namespace toric;

TEST_CASE("principal_divisor") {
  const auto p2 = projective_space(2);
  CHECK(principal_divisor(p2, {{1, 0}}).coefficients() == IntVector{1, 0, -1});
  CHECK(principal_divisor(p2, {{0, 0}}).is_zero());
  for (int a = 0; a <= 3; ++a)
    CHECK(principal_divisor(hirzebruch(a), {{0, 1}}).coefficients() == IntVector{0, 1, a, -1});
}

TEST_CASE("principal_divisor is additive") {
  Rng rng(21);
  for (const auto& [label, fan] : standard_catalog()) {
    const auto n = static_cast<std::size_t>(fan->dimension());
    for (int t = 0; t < 10; ++t) {
      Character m1{IntVector(n)}, m2{IntVector(n)}, sum{IntVector(n)};
      for (std::size_t i = 0; i < n; ++i) {
        m1.coords[i] = uniform_int(rng, -9, 9);
        m2.coords[i] = uniform_int(rng, -9, 9);
        sum.coords[i] = m1.coords[i] + m2.coords[i];
      }
      CHECK(principal_divisor(fan, sum) == principal_divisor(fan, m1) + principal_divisor(fan, m2));
    }
  }
}

TEST_CASE("clear_ray_coefficient examples") {
  const auto p2 = projective_space(2);
  const auto cleared = clear_ray_coefficient(TorusDivisor(p2, {1, 0, 0}), 0);
  CHECK(cleared.m == Character{{1, 0}});
  CHECK(cleared.divisor.coefficients() == IntVector{0, 0, 1});

  const TorusDivisor d(p2, {0, 3, -2});
  const auto untouched = clear_ray_coefficient(d, 0);
  CHECK(untouched.m == Character{{0, 0}});
  CHECK(untouched.divisor == d);

  const auto p1 = projective_space(1);
  for (int deg = -3; deg <= 3; ++deg)
    CHECK(clear_ray_coefficient(TorusDivisor(p1, {deg, 0}), 0).divisor.coefficients() ==
          IntVector{0, deg});
}

TEST_CASE("clear_ray_coefficient output is zero at rho and linearly equivalent") {
  Rng rng(22);
  for (const auto& [label, fan] : standard_catalog()) {
    for (int t = 0; t < 10; ++t) {
      IntVector c(fan->num_rays());
      for (auto& a : c) a = uniform_int(rng, -4, 4);
      const TorusDivisor d(fan, c);
      for (std::size_t rho = 0; rho < fan->num_rays(); ++rho) {
        const auto cleared = clear_ray_coefficient(d, static_cast<int>(rho));
        CHECK(cleared.divisor.coefficient(static_cast<int>(rho)) == 0);
        CHECK(is_linearly_equivalent(d, cleared.divisor) == cleared.m);
      }
    }
  }
}

TEST_CASE("restrict_divisor examples") {
  const auto p2 = projective_space(2);
  for (int d = 0; d <= 5; ++d) {
    const auto r = restrict_divisor(TorusDivisor(p2, {d, 0, 0}), 1);
    CHECK(r.fan()->dimension() == 1);
    CHECK(r.coefficients()[0] + r.coefficients()[1] == d);
  }
  const auto q = hirzebruch(2);
  CHECK(restrict_divisor(TorusDivisor::zero(q), 3).is_zero());
  for (int a = 0; a <= 3; ++a) {
    const auto fa = hirzebruch(a);
    const auto r = restrict_divisor(TorusDivisor::prime(fa, 2), 1);
    CHECK(r.coefficients()[0] + r.coefficients()[1] == 1);
  }
}

TEST_CASE("restrict_divisor reports discarded coefficients") {
  // On P1xP1 the ray -e1 is not adjacent to e1.
  const auto q = p1_product(2);
  RestrictionDiagnostics diag;
  restrict_divisor(TorusDivisor(q, {0, 5, 1, 0}), 0, &diag);
  REQUIRE(diag.discarded.size() == 1);
  CHECK(diag.discarded[0] == std::pair<int, std::int64_t>{1, 5});
}

TEST_CASE("restriction is invariant under linear equivalence") {
  Rng rng(23);
  for (const auto& [label, fan] : standard_catalog()) {
    CAPTURE(label);
    const auto n = static_cast<std::size_t>(fan->dimension());
    for (int t = 0; t < 5; ++t) {
      IntVector c(fan->num_rays());
      for (auto& a : c) a = uniform_int(rng, -4, 4);
      Character m{IntVector(n)};
      for (auto& x : m.coords) x = uniform_int(rng, -3, 3);
      const TorusDivisor d(fan, c);
      const TorusDivisor shifted = d - principal_divisor(fan, m);
      for (std::size_t rho = 0; rho < fan->num_rays(); ++rho) {
        const auto st = star_fan(fan, Cone{static_cast<int>(rho)});
        const auto a = restrict_divisor(d, static_cast<int>(rho), st);
        const auto b = restrict_divisor(shifted, static_cast<int>(rho), st);
        CHECK(is_linearly_equivalent(a, b).has_value());
      }
    }
  }
}

TEST_CASE("is_linearly_equivalent") {
  const auto p2 = projective_space(2);
  CHECK(is_linearly_equivalent(TorusDivisor(p2, {1, 0, 0}), TorusDivisor(p2, {0, 0, 1})) ==
        Character{{1, 0}});
  const TorusDivisor d(p2, {2, -1, 3});
  CHECK(is_linearly_equivalent(d, d) == Character{{0, 0}});
  const auto q = p1_product(2);
  CHECK_FALSE(is_linearly_equivalent(TorusDivisor::prime(q, 0), TorusDivisor::prime(q, 2)).has_value());
}

TEST_CASE("linear-equivalence witness is unique under permuted equations") {
  Rng rng(24);
  for (const auto& [label, fan] : standard_catalog()) {
    const auto n = static_cast<std::size_t>(fan->dimension());
    Character m{IntVector(n)};
    for (auto& x : m.coords) x = uniform_int(rng, -5, 5);
    const auto div = principal_divisor(fan, m);
    CHECK(is_linearly_equivalent(div, TorusDivisor::zero(fan)) == m);

    std::vector<std::size_t> perm(fan->num_rays());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    shuffle(perm, rng);
    IntMatrix rows;
    IntVector rhs;
    for (auto i : perm) {
      rows.push_back(fan->rays()[i]);
      rhs.push_back(div.coefficients()[i]);
    }
    CHECK(solve_integer(rows, n, rhs) == m.coords);
  }
}

TEST_CASE("canonical_divisor") {
  CHECK(canonical_divisor(projective_space(2)).coefficients() == IntVector{-1, -1, -1});
  CHECK(canonical_divisor(projective_space(1)).coefficients() == IntVector{-1, -1});
  CHECK(canonical_divisor(hirzebruch(1)).coefficients() == IntVector{-1, -1, -1, -1});
}

TEST_CASE("divisor literals") {
  const auto p2 = projective_space(2);
  CHECK(parse_divisor(p2, "1,-2, 3").coefficients() == IntVector{1, -2, 3});
  CHECK(parse_divisor(p2, "1,-2,3").to_string() == "1,-2,3");
  CHECK_THROWS_AS(parse_divisor(p2, "1,2"), ParseError);
  CHECK_THROWS_AS(parse_divisor(p2, "1,,2"), ParseError);
  CHECK_THROWS_AS(parse_divisor(p2, "1,a,2"), ParseError);
  CHECK_THROWS_AS(TorusDivisor(p2, {1, 2}), DomainError);
}
