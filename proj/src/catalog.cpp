#include "toric/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

FanPtr projective_space(int n) {
  if (n < 1) throw DomainError("projective_space needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < un; ++i) {
    LatticeVector e(un, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(un, -1);
  std::vector<Cone> cones;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> rs;
    for (int j = 0; j < n; ++j) rs.push_back((i + j) % (n + 1));
    cones.emplace_back(std::move(rs));
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

FanPtr hirzebruch(int a) {
  if (a < 0) throw DomainError("hirzebruch needs a >= 0");
  return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

FanPtr product(const Fan& a, const Fan& b) {
  const auto da = static_cast<std::size_t>(a.dimension());
  const auto db = static_cast<std::size_t>(b.dimension());
  std::vector<LatticeVector> rays;
  for (const auto& r : a.rays()) {
    LatticeVector v(da + db, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    LatticeVector v(da + db, 0);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
    rays.push_back(std::move(v));
  }
  const int offset = static_cast<int>(a.num_rays());
  std::vector<Cone> cones;
  for (const auto& ca : a.maximal_cones()) {
    for (const auto& cb : b.maximal_cones()) {
      std::vector<int> rs = ca.rays();
      for (int r : cb.rays()) rs.push_back(r + offset);
      cones.emplace_back(std::move(rs));
    }
  }
  return make_fan(a.dimension() + b.dimension(), std::move(rays), std::move(cones));
}

FanPtr p1_product(int k) {
  if (k < 1) throw DomainError("p1_product needs k >= 1");
  FanPtr fan = projective_space(1);
  for (int i = 1; i < k; ++i) fan = product(*fan, *projective_space(1));
  return fan;
}

FanPtr blowup_2d(const Fan& fan, const Cone& cone) {
  if (fan.dimension() != 2 || cone.dim() != 2) throw DomainError("blowup_2d needs a 2-dimensional cone");
  const auto& mc = fan.maximal_cones();
  std::vector<Cone> cones;
  bool found = false;
  const int fresh = static_cast<int>(fan.num_rays());
  for (const auto& c : mc) {
    if (c == cone) {
      found = true;
      cones.push_back(Cone{cone.rays()[0], fresh});
      cones.push_back(Cone{fresh, cone.rays()[1]});
    } else {
      cones.push_back(c);
    }
  }
  if (!found) throw DomainError("cone " + cone.to_string() + " is not a maximal cone");
  auto rays = fan.rays();
  const auto& u = fan.ray(cone.rays()[0]);
  const auto& v = fan.ray(cone.rays()[1]);
  rays.push_back({u[0] + v[0], u[1] + v[1]});
  return make_fan(2, std::move(rays), std::move(cones));
}

FanPtr blowup_p2(int k) {
  if (k < 1 || k > 3) throw DomainError("blowup_p2 needs k in [1, 3]");
  const Cone centers[] = {{0, 1}, {1, 2}, {0, 2}};
  FanPtr fan = projective_space(2);
  for (int i = 0; i < k; ++i) fan = blowup_2d(*fan, centers[i]);
  return fan;
}

FanPtr p1_x_p2() { return product(*projective_space(1), *projective_space(2)); }

namespace {

int int_param(std::span<const std::int64_t> p, std::size_t i) { return static_cast<int>(p[i]); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"projective_space", "N (1..8)", 1,
       [](auto p) {
         if (p[0] < 1 || p[0] > 8) throw DomainError("projective_space needs N in [1, 8]");
         return projective_space(int_param(p, 0));
       },
       {{1}, {2}, {3}, {4}}},
      {"hirzebruch", "A (0..16)", 1,
       [](auto p) {
         if (p[0] < 0 || p[0] > 16) throw DomainError("hirzebruch needs A in [0, 16]");
         return hirzebruch(int_param(p, 0));
       },
       {{0}, {1}, {2}, {3}}},
      {"p1_product", "K (1..4)", 1,
       [](auto p) {
         if (p[0] < 1 || p[0] > 4) throw DomainError("p1_product needs K in [1, 4]");
         return p1_product(int_param(p, 0));
       },
       {{3}}},
      {"blowup_p2", "K (1..3)", 1,
       [](auto p) {
         if (p[0] < 1 || p[0] > 3) throw DomainError("blowup_p2 needs K in [1, 3]");
         return blowup_p2(int_param(p, 0));
       },
       {{1}, {2}, {3}}},
      {"p1_x_p2", "", 0, [](auto) { return p1_x_p2(); }, {{}}},
  };
  return entries;
}

FanPtr build_catalog(std::string_view name, std::span<const std::int64_t> params) {
  for (const auto& e : catalog()) {
    if (e.name != name) continue;
    if (params.size() != e.arity)
      throw DomainError("catalog entry '" + e.name + "' takes " + std::to_string(e.arity) +
                        " parameter(s), got " + std::to_string(params.size()));
    return e.builder(params);
  }
  throw DomainError("unknown catalog entry '" + std::string(name) + "'");
}

namespace {

std::string label_for(const std::string& name, const std::vector<std::int64_t>& params) {
  std::string s = name;
  for (auto p : params) s += ":" + std::to_string(p);
  return s;
}

}  // namespace

std::vector<NamedFan> standard_catalog() {
  std::vector<NamedFan> out;
  for (const auto& e : catalog())
    for (const auto& params : e.standard) out.push_back({label_for(e.name, params), e.builder(params)});
  return out;
}

NamedFan resolve_fan(std::string_view argument) {
  constexpr std::string_view prefix = "catalog:";
  if (argument.substr(0, prefix.size()) == prefix) {
    std::string_view rest = argument.substr(prefix.size());
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
      const std::size_t colon = std::min(rest.find(':', pos), rest.size());
      parts.push_back(rest.substr(pos, colon - pos));
      if (colon == rest.size()) break;
      pos = colon + 1;
    }
    std::vector<std::int64_t> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
      if (ec != std::errc() || ptr != parts[i].data() + parts[i].size() || parts[i].empty())
        throw DomainError("bad catalog parameter '" + std::string(parts[i]) + "'");
      params.push_back(v);
    }
    return {std::string(argument), build_catalog(parts[0], params)};
  }
  std::ifstream in{std::string(argument)};
  if (!in) throw Error("cannot open fan file '" + std::string(argument) + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return {std::string(argument), parse_fan(text.str())};
}

}  // namespace toric
