#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "twoclosure/permutation.hpp"

namespace twoclosure {

using PointSet = std::vector<Point>;

/// A finitely generated permutation group on {0..degree-1}.
///
/// The element set is enumerated lazily on first use and memoized. Copies
/// share the memo; the group itself is immutable.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  /// `elements` must already form a group. Keeps the full element set as the
  /// memo and a small generating set extracted from it.
  static PermGroup from_elements(std::size_t degree,
                                 std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }

  /// All elements, sorted. Throws CapExceeded if |G| > cap.
  const std::vector<Permutation>& elements(std::size_t cap = kDefaultCap) const;
  std::size_t order(std::size_t cap = kDefaultCap) const {
    return elements(cap).size();
  }
  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept;

  /// Same degree and same element set.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Memo {
    std::mutex mutex;
    std::optional<std::vector<Permutation>> elements;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Memo> memo_;
};

/// Breadth-first closure of `generators` under composition, sorted.
std::vector<Permutation> generate_elements(
    std::size_t degree, std::span<const Permutation> generators,
    std::size_t cap = PermGroup::kDefaultCap);

/// Greedy generating set for the group whose elements are given.
std::vector<Permutation> extract_generators(
    std::size_t degree, std::span<const Permutation> elements);

/// orb(G): classes sorted internally and listed by minimal point.
struct OrbitPartition {
  std::vector<PointSet> classes;
  std::vector<std::size_t> point_to_class;

  std::size_t size() const noexcept { return classes.size(); }
  /// Index of the class equal to `points`, if any.
  std::optional<std::size_t> find_class(std::span<const Point> points) const;
  std::vector<std::size_t> class_sizes() const;
};

OrbitPartition orbits(const PermGroup& group);
bool is_transitive(const PermGroup& group);

/// G_D: all elements fixing every point of `points`.
PermGroup pointwise_stabilizer(const PermGroup& group,
                               std::span<const Point> points);
/// G_{D}: all elements mapping `points` onto itself.
PermGroup setwise_stabilizer(const PermGroup& group,
                             std::span<const Point> points);

/// G^D relabeled to {0..|D|-1} by sorted order of D. Throws NotInvariant.
PermGroup restriction(const PermGroup& group, std::span<const Point> points);

/// Restricts one permutation to an invariant set, relabeling by sorted order.
Permutation restrict_permutation(const Permutation& p,
                                 std::span<const Point> sorted_points);

/// Embeds a permutation of |D| points into `degree` points, acting on the
/// sorted set D and fixing everything else.
Permutation extend_by_identity(const Permutation& p,
                               std::span<const Point> sorted_points,
                               std::size_t degree);

bool is_subgroup(const PermGroup& sub, const PermGroup& group);

/// G^{orb(Z)}: the action of G on the orbits of Z, classes indexed by
/// minimal point. Throws NotBlockSystem.
PermGroup induced_on_orbits(const PermGroup& group, const PermGroup& normal);

bool is_abelian(const PermGroup& group);
/// The prime p when |G| is a power of p (|G| > 1).
std::optional<std::uint64_t> p_group_prime(const PermGroup& group);

/// Every transitive constituent is cyclic.
bool cyclic_constituents(const PermGroup& group);
/// Every transitive constituent is regular.
bool is_quasiregular(const PermGroup& group);

/// Relabels every generator by `relabel` (point i becomes relabel[i]).
PermGroup relabel(const PermGroup& group, const Permutation& relabel);

}  // namespace twoclosure
