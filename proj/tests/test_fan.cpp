#include <doctest.h>

#include <set>

#include "toric/catalog.hpp"
#include "toric/error.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

constexpr const char* kP2Text = R"(# the projective plane
dim 2
rays
1 0
0 1
-1 -1
cones
0 1
1 2
2 0
)";

}  // namespace

TEST_CASE("parse_fan reads the P2 fan") {
  const auto fan = parse_fan(kP2Text);
  CHECK(fan->dimension() == 2);
  CHECK(fan->num_rays() == 3);
  CHECK(fan->maximal_cones().size() == 3);
  CHECK(fan->ray(2) == LatticeVector{-1, -1});
  CHECK(fan->maximal_cones()[2] == Cone{0, 2});
  CHECK(*fan == *projective_space(2));
  CHECK(*parse_fan(format_fan(*fan)) == *fan);
}

TEST_CASE("parse_fan diagnostics") {
  SUBCASE("non-primitive ray") {
    try {
      parse_fan("dim 2\nrays\n2 0\n0 1\n-1 -1\ncones\n0 1\n1 2\n2 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("non-primitive") != std::string::npos);
    }
  }
  SUBCASE("unused ray") {
    try {
      parse_fan("dim 2\nrays\n1 0\n0 1\n-1 -1\ncones\n0 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(std::string(e.what()).find("unused ray 2") != std::string::npos);
    }
  }
  SUBCASE("cone of wrong size") {
    CHECK_THROWS_AS(parse_fan("dim 2\nrays\n1 0\n0 1\ncones\n0\n"), ParseError);
  }
  SUBCASE("duplicate ray") {
    CHECK_THROWS_AS(parse_fan("dim 1\nrays\n1\n1\ncones\n0\n1\n"), ParseError);
  }
  SUBCASE("malformed token carries its column") {
    try {
      parse_fan("dim 2\nrays\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("missing sections") {
    CHECK_THROWS_AS(parse_fan(""), ParseError);
    CHECK_THROWS_AS(parse_fan("dim 2\n"), ParseError);
    CHECK_THROWS_AS(parse_fan("dim 2\nrays\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_fan("dimension 2\n"), ParseError);
  }
  SUBCASE("index out of range") {
    CHECK_THROWS_AS(parse_fan("dim 1\nrays\n1\n-1\ncones\n0\n2\n"), ParseError);
  }
}

TEST_CASE("is_smooth") {
  CHECK(is_smooth(*projective_space(2)));
  CHECK(is_smooth(*p1_product(2)));
  const auto bad = make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  const auto report = is_smooth(*bad);
  CHECK_FALSE(report);
  CHECK(*report.witness == Cone{0, 1});
  CHECK(report.witness_determinant == 2);
}

TEST_CASE("is_complete") {
  CHECK(is_complete(*projective_space(1)));
  CHECK(is_complete(*projective_space(3)));

  const auto single = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  const auto report = is_complete(*single);
  CHECK_FALSE(report);
  REQUIRE(report.wall);
  CHECK(*report.wall == Cone{0});

  // Eight cones winding twice around the origin: a pseudomanifold whose
  // walls are all glued correctly, caught only by the point sweep.
  const auto twice = make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
  const auto wrapped = is_complete(*twice);
  CHECK_FALSE(wrapped);
  CHECK(wrapped.point.has_value());

  // Cones {0,1} and {0,2} both lie above the wall spanned by ray 0.
  const auto folded = make_fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {1, 2}, {2, 0}});
  const auto fold = is_complete(*folded);
  CHECK_FALSE(fold);
  REQUIRE(fold.wall);
  CHECK(*fold.wall == Cone{0});
}

TEST_CASE("P3 walls each lie in exactly two maximal cones") {
  const auto fan = projective_space(3);
  CHECK(fan->faces(2).size() == 6);
  for (const auto& wall : fan->faces(2)) CHECK(fan->maximal_cones_containing(wall).size() == 2);
}

TEST_CASE("enumerate_faces") {
  const auto p2 = projective_space(2);
  CHECK(enumerate_faces(*p2, 1).size() == 3);
  CHECK(enumerate_faces(*p2, 2).size() == 3);
  const auto q = p1_product(2);
  const auto quadrants = enumerate_faces(*q, 2);
  CHECK(quadrants.size() == 4);
  CHECK(std::find(quadrants.begin(), quadrants.end(), Cone{0, 1}) == quadrants.end());
  CHECK_THROWS_AS(enumerate_faces(*p2, 3), DomainError);
  CHECK_THROWS_AS(enumerate_faces(*p2, -1), DomainError);
}

TEST_CASE("face invariants on the standard catalog") {
  for (const auto& [label, fan] : standard_catalog()) {
    CAPTURE(label);
    const int n = fan->dimension();
    const auto top_faces = enumerate_faces(*fan, n);
    std::set<Cone> top(top_faces.begin(), top_faces.end());
    std::set<Cone> maximal(fan->maximal_cones().begin(), fan->maximal_cones().end());
    CHECK(top == maximal);
    CHECK(enumerate_faces(*fan, 0).size() == 1);
    // each maximal cone has n walls, each wall is shared by two cones
    CHECK(fan->maximal_cones().size() * static_cast<std::size_t>(n) == 2 * fan->faces(n - 1).size());
    auto faces = enumerate_faces(*fan, 1);
    CHECK(std::is_sorted(faces.begin(), faces.end()));
  }
}

TEST_CASE("spans_cone") {
  const auto p2 = projective_space(2);
  const int pair[] = {1, 0};
  CHECK(spans_cone(*p2, pair) == Cone{0, 1});
  const auto q = p1_product(2);
  const int opposite[] = {0, 1};
  CHECK_FALSE(spans_cone(*q, opposite).has_value());
  CHECK(spans_cone(*q, std::span<const int>{}) == Cone{});
}

TEST_CASE("star_fan examples") {
  SUBCASE("P2 along ray (1,0) is P1") {
    const auto st = star_fan(projective_space(2), Cone{0});
    CHECK(st.fan->dimension() == 1);
    CHECK(st.star_to_original == std::vector<int>{1, 2});
    std::set<LatticeVector> rays(st.fan->rays().begin(), st.fan->rays().end());
    CHECK(rays == std::set<LatticeVector>{{1}, {-1}});
    CHECK(st.fan->maximal_cones().size() == 2);
  }
  SUBCASE("P1xP1 along e1 is P1") {
    const auto st = star_fan(p1_product(2), Cone{0});
    CHECK(st.star_to_original == std::vector<int>{2, 3});
    std::set<LatticeVector> rays(st.fan->rays().begin(), st.fan->rays().end());
    CHECK(rays == std::set<LatticeVector>{{1}, {-1}});
    CHECK_FALSE(st.original_to_star[1].has_value());
  }
  SUBCASE("zero cone gives the fan itself") {
    const auto f = hirzebruch(2);
    const auto st = star_fan(f, Cone{});
    CHECK(*st.fan == *f);
    CHECK(st.star_to_original == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("non-face") { CHECK_THROWS_AS(star_fan(p1_product(2), Cone{0, 1}), DomainError); }
}

TEST_CASE("star fans of every face are smooth and complete") {
  for (const auto& [label, fan] : standard_catalog()) {
    for (int k = 0; k <= fan->dimension(); ++k) {
      for (const auto& tau : fan->faces(k)) {
        CAPTURE(label);
        CAPTURE(tau.to_string());
        const auto st = star_fan(fan, tau);
        CHECK(st.fan->dimension() == fan->dimension() - k);
        CHECK(is_smooth(*st.fan));
        CHECK(is_complete(*st.fan));
        // correspondence is a bijection onto the star rays
        REQUIRE(st.star_to_original.size() == st.fan->num_rays());
        for (std::size_t s = 0; s < st.star_to_original.size(); ++s)
          CHECK(st.original_to_star[static_cast<std::size_t>(st.star_to_original[s])] ==
                static_cast<int>(s));
        for (const auto& r : st.fan->rays()) CHECK(is_primitive(r));
      }
    }
  }
}
