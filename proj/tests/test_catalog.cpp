#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "toric/catalog.hpp"
#include "toric/error.hpp"
#include "toric/todd.hpp"

using namespace toric;

TEST_CASE("catalog builders") {
  const auto p2 = build_catalog("projective_space", std::vector<std::int64_t>{2});
  CHECK(p2->rays() == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(p2->maximal_cones() == std::vector<Cone>{{0, 1}, {1, 2}, {2, 0}});

  const auto f2 = build_catalog("hirzebruch", std::vector<std::int64_t>{2});
  CHECK(f2->rays() == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 2}, {0, -1}});
  CHECK(f2->maximal_cones() == std::vector<Cone>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});

  const auto bl = build_catalog("blowup_p2", std::vector<std::int64_t>{1});
  CHECK(bl->rays() == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -1}, {1, 1}});
  CHECK(bl->maximal_cones() == std::vector<Cone>{{0, 3}, {3, 1}, {1, 2}, {2, 0}});

  const auto bl3 = blowup_p2(3);
  CHECK(bl3->num_rays() == 6);
  CHECK(bl3->ray(4) == LatticeVector{-1, 0});
  CHECK(bl3->ray(5) == LatticeVector{0, -1});

  const auto q = p1_product(2);
  CHECK(q->rays() == std::vector<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(p1_x_p2()->dimension() == 3);
  CHECK(p1_x_p2()->num_rays() == 5);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(build_catalog("grassmannian", std::vector<std::int64_t>{2}), DomainError);
  CHECK_THROWS_AS(build_catalog("projective_space", std::vector<std::int64_t>{0}), DomainError);
  CHECK_THROWS_AS(build_catalog("projective_space", std::vector<std::int64_t>{}), DomainError);
  CHECK_THROWS_AS(build_catalog("blowup_p2", std::vector<std::int64_t>{4}), DomainError);
  CHECK_THROWS_AS(resolve_fan("catalog:hirzebruch:x"), DomainError);
  CHECK_THROWS_AS(resolve_fan("/nonexistent/fan.txt"), Error);
}

TEST_CASE("every standard fan is smooth, complete and has Todd genus one") {
  const auto fans = standard_catalog();
  CHECK(fans.size() >= 10);
  for (const auto& [label, fan] : fans) {
    CAPTURE(label);
    CHECK(is_smooth(*fan));
    CHECK(is_complete(*fan));
    CHECK(verify_ishida(fan));
    CHECK(*parse_fan(format_fan(*fan)) == *fan);
  }
}

TEST_CASE("resolve_fan reads catalog references and files") {
  const auto named = resolve_fan("catalog:hirzebruch:3");
  CHECK(named.label == "catalog:hirzebruch:3");
  CHECK(*named.fan == *hirzebruch(3));
  CHECK(*resolve_fan("catalog:p1_x_p2").fan == *p1_x_p2());

  const std::string path = "toric_test_fan.txt";
  {
    std::ofstream out(path);
    out << format_fan(*blowup_p2(2));
  }
  CHECK(*resolve_fan(path).fan == *blowup_p2(2));
  std::remove(path.c_str());
}
