#include "toric/fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>

#include "toric/error.hpp"
#include "toric/random.hpp"

namespace toric {

Cone::Cone(std::vector<int> rays) : rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
  if (std::adjacent_find(rays_.begin(), rays_.end()) != rays_.end())
    throw DomainError("cone lists a ray twice");
}

bool Cone::contains(int ray) const { return std::binary_search(rays_.begin(), rays_.end(), ray); }

bool Cone::contains(const Cone& face) const {
  return std::includes(rays_.begin(), rays_.end(), face.rays_.begin(), face.rays_.end());
}

Cone Cone::with(int ray) const {
  auto r = rays_;
  r.push_back(ray);
  return Cone(std::move(r));
}

Cone Cone::without(int ray) const {
  auto r = rays_;
  r.erase(std::remove(r.begin(), r.end(), ray), r.end());
  Cone c;
  c.rays_ = std::move(r);
  return c;
}

std::string Cone::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rays_[i]);
  }
  return s + "}";
}

namespace {

// n x n matrix whose columns are the cone's ray generators.
IntMatrix cone_matrix(const Fan& fan, const Cone& cone) {
  const auto n = static_cast<std::size_t>(fan.dimension());
  IntMatrix m(n, IntVector(cone.dim(), 0));
  for (std::size_t j = 0; j < cone.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m[r][j] = fan.ray(cone.rays()[j])[r];
  return m;
}

std::string vector_text(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

Fan::Fan(int dimension, std::vector<LatticeVector> rays, std::vector<Cone> maximal_cones)
    : dimension_(dimension), rays_(std::move(rays)), maximal_cones_(std::move(maximal_cones)) {
  if (dimension_ < 0) throw DomainError("fan dimension must be non-negative");
  const auto n = static_cast<std::size_t>(dimension_);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != n)
      throw DomainError("ray " + std::to_string(i) + " has " + std::to_string(rays_[i].size()) +
                        " coordinates, expected " + std::to_string(n));
    if (!is_primitive(rays_[i]))
      throw DomainError("ray " + std::to_string(i) + " " + vector_text(rays_[i]) +
                        " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == rays_[i])
        throw DomainError("duplicate ray " + vector_text(rays_[i]) + " at indices " +
                          std::to_string(j) + " and " + std::to_string(i));
  }
  if (maximal_cones_.empty()) throw DomainError("fan has no maximal cones");
  std::vector<bool> used(rays_.size(), false);
  std::set<Cone> seen;
  for (const auto& c : maximal_cones_) {
    if (c.dim() != n)
      throw DomainError("maximal cone " + c.to_string() + " has " + std::to_string(c.dim()) +
                        " rays, expected " + std::to_string(n));
    for (int r : c.rays()) {
      if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
        throw DomainError("maximal cone " + c.to_string() + " references unknown ray " +
                          std::to_string(r));
      used[static_cast<std::size_t>(r)] = true;
    }
    if (!seen.insert(c).second) throw DomainError("duplicate maximal cone " + c.to_string());
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw DomainError("ray " + std::to_string(i) + " is not used by any cone");

  // Faces are exactly the subsets of maximal cones (simplicial fans).
  std::vector<std::size_t> order(maximal_cones_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return maximal_cones_[a] < maximal_cones_[b]; });
  for (std::size_t idx : order) {
    const auto& rs = maximal_cones_[idx].rays();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::uint64_t{1} << b)) sub.push_back(rs[b]);
      containing_[Cone(std::move(sub))].push_back(idx);
    }
  }
  faces_by_dim_.assign(n + 1, {});
  for (const auto& [face, _] : containing_) faces_by_dim_[face.dim()].push_back(face);

  for (const auto& c : maximal_cones_) dual_bases_.push_back(unimodular_inverse(cone_matrix(*this, c)));

  std::ostringstream fp;
  fp << "dim " << n << ";rays";
  for (const auto& r : rays_) fp << ' ' << vector_text(r);
  fp << ";cones";
  for (const auto& c : maximal_cones_) fp << ' ' << c.to_string();
  fingerprint_ = fp.str();
}

const std::vector<Cone>& Fan::faces(int k) const {
  if (k < 0 || k > dimension_)
    throw DomainError("face dimension " + std::to_string(k) + " outside [0, " +
                      std::to_string(dimension_) + "]");
  return faces_by_dim_[static_cast<std::size_t>(k)];
}

std::span<const std::size_t> Fan::maximal_cones_containing(const Cone& face) const {
  auto it = containing_.find(face);
  if (it == containing_.end()) return {};
  return it->second;
}

std::string format_fan(const Fan& fan) {
  std::ostringstream out;
  out << "dim " << fan.dimension() << "\nrays\n";
  for (const auto& r : fan.rays()) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << "\n";
  }
  out << "cones\n";
  for (const auto& c : fan.maximal_cones()) {
    for (std::size_t i = 0; i < c.dim(); ++i) out << (i ? " " : "") << c.rays()[i];
    out << "\n";
  }
  return out.str();
}

SmoothnessReport is_smooth(const Fan& fan) {
  for (const auto& c : fan.maximal_cones()) {
    const std::int64_t det = determinant(cone_matrix(fan, c));
    if (std::llabs(det) != 1) return {false, c, det};
  }
  return {};
}

CompletenessReport is_complete(const Fan& fan, std::uint64_t seed, int samples) {
  const int n = fan.dimension();
  if (n == 0) return {};
  const auto& cones = fan.maximal_cones();

  std::vector<std::int64_t> dets;
  for (const auto& c : cones) {
    dets.push_back(determinant(cone_matrix(fan, c)));
    if (dets.back() == 0)
      return {false, "maximal cone rays are linearly dependent", c, std::nullopt};
  }

  // (a) wall condition
  for (const auto& wall : fan.faces(n - 1)) {
    const auto owners = fan.maximal_cones_containing(wall);
    if (owners.size() != 2)
      return {false, "wall lies in " + std::to_string(owners.size()) + " maximal cone(s)", wall,
              std::nullopt};
  }

  // (b) adjacency connectivity
  std::vector<bool> reached(cones.size(), false);
  std::queue<std::size_t> frontier;
  reached[0] = true;
  frontier.push(0);
  std::size_t reached_count = 1;
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop();
    for (int r : cones[cur].rays()) {
      for (std::size_t nb : fan.maximal_cones_containing(cones[cur].without(r))) {
        if (!reached[nb]) {
          reached[nb] = true;
          ++reached_count;
          frontier.push(nb);
        }
      }
    }
  }
  if (reached_count != cones.size()) {
    for (std::size_t i = 0; i < cones.size(); ++i)
      if (!reached[i]) return {false, "maximal cone not connected to the rest", cones[i], std::nullopt};
  }

  // (c) the two cones at each wall lie on opposite sides of it
  for (const auto& wall : fan.faces(n - 1)) {
    const auto owners = fan.maximal_cones_containing(wall);
    auto side = [&](std::size_t idx) {
      int extra = -1;
      for (int r : cones[idx].rays())
        if (!wall.contains(r)) extra = r;
      IntMatrix m(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
      for (std::size_t j = 0; j < wall.dim(); ++j)
        for (std::size_t r = 0; r < m.size(); ++r) m[r][j] = fan.ray(wall.rays()[j])[r];
      for (std::size_t r = 0; r < m.size(); ++r) m[r][wall.dim()] = fan.ray(extra)[r];
      const std::int64_t d = determinant(m);
      return (d > 0) - (d < 0);
    };
    if (side(owners[0]) * side(owners[1]) >= 0)
      return {false, "cones on both sides of wall overlap", wall, std::nullopt};
  }

  // (d) seeded point sweep in the ball of radius R
  constexpr std::int64_t R = 1'000'000;
  std::vector<IntMatrix> adjugates;
  for (const auto& c : cones) adjugates.push_back(adjugate(cone_matrix(fan, c)));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    LatticeVector p(static_cast<std::size_t>(n));
    __int128 norm2;
    do {
      norm2 = 0;
      for (auto& x : p) {
        x = uniform_int(rng, -R, R);
        norm2 += static_cast<__int128>(x) * x;
      }
    } while (norm2 == 0 || norm2 > static_cast<__int128>(R) * R);
    int closed = 0;
    int interior = 0;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const IntVector coords = multiply(adjugates[i], p);
      bool inside = true;
      bool strictly = true;
      for (auto x : coords) {
        const std::int64_t signed_x = dets[i] > 0 ? x : -x;
        if (signed_x < 0) inside = false;
        if (signed_x <= 0) strictly = false;
      }
      closed += inside;
      interior += strictly;
    }
    if (closed == 0) return {false, "sample point lies in no cone", std::nullopt, p};
    if (interior > 1) return {false, "sample point lies inside two cones", std::nullopt, p};
  }
  return {};
}

std::vector<Cone> enumerate_faces(const Fan& fan, int k) { return fan.faces(k); }

std::optional<Cone> spans_cone(const Fan& fan, std::span<const int> rays) {
  std::vector<int> v(rays.begin(), rays.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return std::nullopt;
  Cone c(std::move(v));
  if (!fan.is_face(c)) return std::nullopt;
  return c;
}

StarFan star_fan(const FanPtr& fan_ptr, const Cone& tau) {
  const Fan& fan = *fan_ptr;
  if (!fan.is_face(tau)) throw DomainError("cone " + tau.to_string() + " is not a face of the fan");
  StarFan out;
  out.original_to_star.assign(fan.num_rays(), std::nullopt);
  if (tau.empty()) {
    out.fan = fan_ptr;
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      out.star_to_original.push_back(static_cast<int>(i));
      out.original_to_star[i] = static_cast<int>(i);
    }
    return out;
  }

  const auto n = static_cast<std::size_t>(fan.dimension());
  const std::size_t k = tau.dim();
  // Column echelon of the k x n matrix of tau's rays: rows(tau) * U = [H | 0].
  // Columns k.. of U then pair to zero with tau, and (with H unimodular) give
  // coordinates on N / span(tau).
  IntMatrix tau_rows;
  for (int r : tau.rays()) tau_rows.push_back(fan.ray(r));
  const ColumnEchelon ce = column_echelon(tau_rows, n);
  if (ce.rank() != k) throw DomainError("face " + tau.to_string() + " has dependent rays");
  IntMatrix h(k, IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h[i][j] = ce.echelon[i][j];
  if (std::llabs(determinant(h)) != 1)
    throw DomainError("face " + tau.to_string() + " does not extend to a lattice basis");

  auto project = [&](const LatticeVector& v) {
    LatticeVector p(n - k, 0);
    for (std::size_t i = 0; i < n - k; ++i)
      for (std::size_t r = 0; r < n; ++r)
        p[i] = checked_add(p[i], checked_mul(ce.transform[r][k + i], v[r]));
    return p;
  };

  std::vector<LatticeVector> star_rays;
  for (std::size_t g = 0; g < fan.num_rays(); ++g) {
    const int gi = static_cast<int>(g);
    if (tau.contains(gi) || !fan.is_face(tau.with(gi))) continue;
    LatticeVector p = make_primitive(project(fan.ray(gi)));
    if (gcd_of(p) == 0) throw DomainError("ray projects to zero in star fan");
    out.original_to_star[g] = static_cast<int>(star_rays.size());
    out.star_to_original.push_back(gi);
    star_rays.push_back(std::move(p));
  }

  std::vector<Cone> star_cones;
  for (std::size_t idx : fan.maximal_cones_containing(tau)) {
    std::vector<int> rs;
    for (int r : fan.maximal_cones()[idx].rays())
      if (!tau.contains(r)) rs.push_back(*out.original_to_star[static_cast<std::size_t>(r)]);
    star_cones.emplace_back(std::move(rs));
  }
  std::sort(star_cones.begin(), star_cones.end());
  out.fan = make_fan(static_cast<int>(n - k), std::move(star_rays), std::move(star_cones));
  return out;
}

}  // namespace toric
