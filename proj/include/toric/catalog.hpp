#pragma once

// Builders for the standard smooth complete fans used as a test corpus.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

FanPtr projective_space(int n);
// F_a: rays (1,0),(0,1),(-1,a),(0,-1).
FanPtr hirzebruch(int a);
// Rays of `a` (padded with zeros) followed by rays of `b`.
FanPtr product(const Fan& a, const Fan& b);
// (P^1)^k, rays e1,-e1,e2,-e2,...
FanPtr p1_product(int k);
// Star subdivision of the 2-dimensional maximal cone `cone` by the sum of its rays.
FanPtr blowup_2d(const Fan& fan, const Cone& cone);
// P^2 blown up at k in [1,3] torus-fixed points, in the order {0,1},{1,2},{2,0}.
FanPtr blowup_p2(int k);
FanPtr p1_x_p2();

struct CatalogEntry {
  std::string name;
  std::string parameters;  // usage text, e.g. "N"
  std::size_t arity = 0;
  std::function<FanPtr(std::span<const std::int64_t>)> builder;
  // Parameter lists that make up the standard corpus.
  std::vector<std::vector<std::int64_t>> standard;
};

const std::vector<CatalogEntry>& catalog();

// Throws DomainError for unknown names or invalid parameters.
FanPtr build_catalog(std::string_view name, std::span<const std::int64_t> params);

struct NamedFan {
  std::string label;  // "name" or "name:p1:p2"
  FanPtr fan;
};

// P^1..P^4, F_0..F_3, (P^1)^3, Bl_k P^2 (k = 1..3), P^1 x P^2.
std::vector<NamedFan> standard_catalog();

// "catalog:NAME[:P...]" builds from the catalog; anything else is read as a
// fan file path. Throws Error / ParseError.
NamedFan resolve_fan(std::string_view argument);

}  // namespace toric
