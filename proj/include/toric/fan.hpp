#pragma once

// Smooth complete fans: the combinatorial data of a toric variety.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using LatticeVector = IntVector;

// A cone of a simplicial fan, identified by its sorted set of ray indices.
// The empty cone is the origin.
class Cone {
 public:
  Cone() = default;
  // Sorts; throws DomainError on repeated indices.
  explicit Cone(std::vector<int> rays);
  Cone(std::initializer_list<int> rays) : Cone(std::vector<int>(rays)) {}

  const std::vector<int>& rays() const noexcept { return rays_; }
  std::size_t dim() const noexcept { return rays_.size(); }
  bool empty() const noexcept { return rays_.empty(); }
  bool contains(int ray) const;
  bool contains(const Cone& face) const;

  // Cone with one more ray; ray must not already be present.
  Cone with(int ray) const;
  Cone without(int ray) const;

  std::string to_string() const;

  auto operator<=>(const Cone&) const = default;

 private:
  std::vector<int> rays_;
};

class Fan {
 public:
  // Validates structure only: ray lengths, primitivity, no duplicate rays,
  // maximal cones of size `dimension` with valid distinct indices, every ray
  // used. Smoothness and completeness are checked by is_smooth/is_complete.
  // Throws DomainError.
  Fan(int dimension, std::vector<LatticeVector> rays, std::vector<Cone> maximal_cones);

  int dimension() const noexcept { return dimension_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  const LatticeVector& ray(int index) const { return rays_.at(static_cast<std::size_t>(index)); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  // In input order.
  const std::vector<Cone>& maximal_cones() const noexcept { return maximal_cones_; }

  // Faces with k rays, sorted.
  const std::vector<Cone>& faces(int k) const;
  bool is_face(const Cone& c) const { return containing_.count(c) != 0; }

  // Indices into maximal_cones() of the cones containing `face`, ordered so the
  // lexicographically smallest cone comes first. Empty if `face` is not a face.
  std::span<const std::size_t> maximal_cones_containing(const Cone& face) const;

  // Row i is the character dual to the i-th ray of maximal cone `cone_index`
  // (pairing 1 with it, 0 with the cone's other rays). Absent when the cone is
  // not unimodular.
  const std::optional<IntMatrix>& dual_basis(std::size_t cone_index) const {
    return dual_bases_.at(cone_index);
  }

  // Stable text identity of (dimension, rays, maximal cones).
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  bool operator==(const Fan& other) const { return fingerprint_ == other.fingerprint_; }

 private:
  int dimension_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> maximal_cones_;
  std::vector<std::vector<Cone>> faces_by_dim_;
  std::map<Cone, std::vector<std::size_t>> containing_;
  std::vector<std::optional<IntMatrix>> dual_bases_;
  std::string fingerprint_;
};

using FanPtr = std::shared_ptr<const Fan>;

inline FanPtr make_fan(int dimension, std::vector<LatticeVector> rays,
                       std::vector<Cone> maximal_cones) {
  return std::make_shared<const Fan>(dimension, std::move(rays), std::move(maximal_cones));
}

// Fan file format:
//   dim <n>
//   rays
//   <n integers per line>
//   cones
//   <n zero-based ray indices per line>
// '#' starts a comment. Throws ParseError with the offending line/column.
FanPtr parse_fan(std::string_view text);

// Inverse of parse_fan; cones are written in stored order.
std::string format_fan(const Fan& fan);

struct SmoothnessReport {
  bool smooth = true;
  std::optional<Cone> witness;  // first maximal cone with |det| != 1
  std::int64_t witness_determinant = 0;
  explicit operator bool() const noexcept { return smooth; }
};

SmoothnessReport is_smooth(const Fan& fan);

struct CompletenessReport {
  bool complete = true;
  std::string reason;
  std::optional<Cone> wall;            // failing wall or cone
  std::optional<LatticeVector> point;  // sampled point outside (or doubly inside)
  explicit operator bool() const noexcept { return complete; }
};

inline constexpr std::uint64_t kCompletenessSeed = 0x5eed'fa11'c0de'0001ull;
inline constexpr int kCompletenessSamples = 1000;

// Wall condition, adjacency connectivity, opposite-side gluing across each
// wall, and a seeded point sweep (every sample in some cone, none interior to
// two). Requires nothing beyond structural validity.
CompletenessReport is_complete(const Fan& fan, std::uint64_t seed = kCompletenessSeed,
                               int samples = kCompletenessSamples);

// Throws DomainError when k is outside [0, n].
std::vector<Cone> enumerate_faces(const Fan& fan, int k);

// The face spanned by exactly these rays, if it belongs to the fan.
std::optional<Cone> spans_cone(const Fan& fan, std::span<const int> rays);

struct StarFan {
  FanPtr fan;
  std::vector<int> star_to_original;                // star ray -> ambient ray
  std::vector<std::optional<int>> original_to_star;  // ambient ray -> star ray, if adjacent
};

// Quotient fan of the cones containing tau, in N / span(tau). Star rays are the
// ambient rays g with tau + g a cone, in increasing ambient index order.
// Throws DomainError if tau is not a face or its rays do not extend to a
// lattice basis.
StarFan star_fan(const FanPtr& fan, const Cone& tau);

}  // namespace toric
