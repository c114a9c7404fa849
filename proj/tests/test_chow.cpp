#include <doctest.h>

#include <algorithm>

#include "toric/catalog.hpp"
#include "toric/chow.hpp"
#include "toric/random.hpp"

using namespace toric;

namespace {

Rational monomial_degree(const FanPtr& fan, std::vector<int> rays, const MoveConeChooser& chooser = {}) {
  const DivisorPolynomialTerm term{1, std::move(rays)};
  return degree(apply_divisor_polynomial(CycleClass::fundamental(fan), std::span(&term, 1), chooser));
}

// On a complete smooth 2-dimensional fan, neighbours satisfy
// u_prev + u_next = k u_i and D_i^2 = -k.
std::int64_t self_intersection_by_neighbours(const Fan& fan, int i) {
  std::vector<int> nbrs;
  for (const auto& wall : fan.faces(2))
    if (wall.contains(i)) nbrs.push_back(wall.rays()[0] == i ? wall.rays()[1] : wall.rays()[0]);
  REQUIRE(nbrs.size() == 2);
  const auto& u = fan.ray(i);
  const auto& a = fan.ray(nbrs[0]);
  const auto& b = fan.ray(nbrs[1]);
  const LatticeVector s{a[0] + b[0], a[1] + b[1]};
  // s is a multiple of u
  const std::int64_t k = u[0] != 0 ? s[0] / u[0] : s[1] / u[1];
  REQUIRE(s[0] == k * u[0]);
  REQUIRE(s[1] == k * u[1]);
  return -k;
}

}  // namespace

TEST_CASE("multiply_ray_divisor examples") {
  const auto p2 = projective_space(2);
  CHECK(multiply_ray_divisor(CycleClass::orbit(p2, Cone{0}), 1) == CycleClass::orbit(p2, Cone{0, 1}));

  const auto q = p1_product(2);
  CHECK(multiply_ray_divisor(CycleClass::orbit(q, Cone{0}), 1).is_zero());

  for (int a = 0; a <= 3; ++a) {
    const auto fa = hirzebruch(a);
    const auto moved = multiply_ray_divisor(CycleClass::orbit(fa, Cone{1}), 1);
    CHECK(degree(moved) == -a);
  }
}

TEST_CASE("apply_divisor_polynomial examples") {
  const auto p2 = projective_space(2);
  const auto x = CycleClass::fundamental(p2);
  CHECK(apply_divisor_polynomial(x, DivisorPolynomial{}).is_zero());
  const DivisorPolynomial transverse{{1, {0, 1}}};
  CHECK(apply_divisor_polynomial(x, transverse) == CycleClass::orbit(p2, Cone{0, 1}));
  CHECK(monomial_degree(p2, {0, 0}) == 1);
}

TEST_CASE("degree") {
  const auto f = hirzebruch(1);
  for (const auto& sigma : f->maximal_cones()) CHECK(degree(CycleClass::orbit(f, sigma)) == 1);
  auto lower = CycleClass::fundamental(f);
  lower.add(Cone{2}, 5);
  CHECK(degree(lower) == 0);
  CHECK(monomial_degree(projective_space(2), {0, 1}) == 1);
}

TEST_CASE("self-intersections match the neighbour relation") {
  std::vector<FanPtr> surfaces{projective_space(2), p1_product(2), blowup_p2(1), blowup_p2(2), blowup_p2(3)};
  for (int a = 0; a <= 5; ++a) surfaces.push_back(hirzebruch(a));
  for (const auto& fan : surfaces) {
    for (std::size_t i = 0; i < fan->num_rays(); ++i) {
      const int r = static_cast<int>(i);
      CHECK(monomial_degree(fan, {r, r}) == self_intersection_by_neighbours(*fan, r));
    }
  }
}

TEST_CASE("monomial degrees do not depend on factor order") {
  for (const auto& [label, fan] : standard_catalog()) {
    CAPTURE(label);
    const int n = fan->dimension();
    const int r = static_cast<int>(fan->num_rays());
    // all multisets of size n
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<int> perm = idx;
      const Rational reference = monomial_degree(fan, perm);
      while (std::next_permutation(perm.begin(), perm.end())) CHECK(monomial_degree(fan, perm) == reference);
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r - 1) --pos;
      if (pos < 0) break;
      const int v = ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
  }
}

TEST_CASE("move rule is independent of the containing cone") {
  Rng rng(31);
  const MoveConeChooser random_choice = [&rng](std::span<const std::size_t> owners) {
    return owners[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(owners.size()) - 1))];
  };
  for (const auto& [label, fan] : standard_catalog()) {
    CAPTURE(label);
    const int n = fan->dimension();
    for (int t = 0; t < 30; ++t) {
      std::vector<int> rays;
      for (int k = 0; k < n; ++k)
        rays.push_back(static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(fan->num_rays()) - 1)));
      CHECK(monomial_degree(fan, rays, random_choice) == monomial_degree(fan, rays));
    }
  }
}

TEST_CASE("rays sharing no cone intersect to zero") {
  for (const auto& [label, fan] : standard_catalog()) {
    const auto x = CycleClass::fundamental(fan);
    for (std::size_t i = 0; i < fan->num_rays(); ++i) {
      for (std::size_t j = i + 1; j < fan->num_rays(); ++j) {
        const int pair[] = {static_cast<int>(i), static_cast<int>(j)};
        if (spans_cone(*fan, pair)) continue;
        const auto prod = multiply_ray_divisor(multiply_ray_divisor(x, pair[0]), pair[1]);
        CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("multiplication is linear and raises codimension by one") {
  Rng rng(32);
  const auto fan = p1_x_p2();
  const int n = fan->dimension();
  for (int k = 0; k < n; ++k) {
    for (int t = 0; t < 10; ++t) {
      CycleClass a(fan), b(fan);
      for (const auto& tau : fan->faces(k)) {
        a.add(tau, make_rational(uniform_int(rng, -5, 5), uniform_int(rng, 1, 4)));
        b.add(tau, make_rational(uniform_int(rng, -5, 5), uniform_int(rng, 1, 4)));
      }
      const int rho = static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(fan->num_rays()) - 1));
      const auto sum = multiply_ray_divisor(a + b, rho);
      CHECK(sum == multiply_ray_divisor(a, rho) + multiply_ray_divisor(b, rho));
      for (int c = 0; c <= n; ++c)
        if (c != k + 1) CHECK(sum.component(c).empty());

      const DivisorPolynomial p{{make_rational(1, 2), {rho}}, {3, {0, 2}}};
      const DivisorPolynomial q{{-1, {1}}};
      DivisorPolynomial pq = p;
      pq.insert(pq.end(), q.begin(), q.end());
      CHECK(apply_divisor_polynomial(a, pq) == apply_divisor_polynomial(a, p) + apply_divisor_polynomial(a, q));
    }
  }
}

TEST_CASE("exp_divisor") {
  const auto p2 = projective_space(2);
  const auto zero = exp_divisor(TorusDivisor::zero(p2), 2);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coefficient == 1);
  CHECK(zero[0].rays.empty());

  const auto p1 = projective_space(1);
  const auto e1 = exp_divisor(TorusDivisor(p1, {1, 0}), 1);
  REQUIRE(e1.size() == 2);
  CHECK(e1[1].coefficient == 1);
  CHECK(e1[1].rays == std::vector<int>{0});

  // 1 + D0 + D1 + (D0^2 + 2 D0 D1 + D1^2) / 2
  const auto e2 = exp_divisor(TorusDivisor(p2, {1, 1, 0}), 2);
  REQUIRE(e2.size() == 6);
  CHECK(e2[3].rays == std::vector<int>{0, 0});
  CHECK(e2[3].coefficient == make_rational(1, 2));
  CHECK(e2[4].rays == std::vector<int>{0, 1});
  CHECK(e2[4].coefficient == 1);
  CHECK(e2[5].rays == std::vector<int>{1, 1});
  CHECK(e2[5].coefficient == make_rational(1, 2));

  // coefficient of D0^2 D1 in D^3/3! is a0^2 a1 / 2
  const auto e3 = exp_divisor(TorusDivisor(projective_space(3), {2, -3, 0, 0}), 3);
  const auto it = std::find_if(e3.begin(), e3.end(), [](const auto& t) { return t.rays == std::vector<int>{0, 0, 1}; });
  REQUIRE(it != e3.end());
  CHECK(it->coefficient == -6);
}
