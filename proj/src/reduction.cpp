#include "twoclosure/reduction.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "twoclosure/errors.hpp"
#include "twoclosure/number_theory.hpp"

namespace twoclosure {

namespace {

std::vector<Permutation> restrict_all(const std::vector<Permutation>& elements,
                                      std::span<const Point> sorted_points) {
  std::vector<Permutation> result;
  result.reserve(elements.size());
  for (const auto& e : elements) {
    result.push_back(restrict_permutation(e, sorted_points));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::size_t require_orbit(const OrbitPartition& partition,
                          std::span<const Point> orbit) {
  const auto index = partition.find_class(orbit);
  if (!index) throw NotAnOrbit("point set is not an orbit of the group");
  return *index;
}

}  // namespace

std::vector<std::uint64_t> SylowDecomposition::primes() const {
  std::vector<std::uint64_t> result;
  for (const auto& part : parts) result.push_back(part.prime);
  return result;
}

SylowDecomposition sylow_decomposition(const PermGroup& group) {
  if (!is_abelian(group)) {
    throw NotNilpotent("Sylow decomposition is implemented for abelian groups only");
  }
  std::map<std::uint64_t, std::vector<Permutation>> p_parts;
  for (std::uint64_t p : prime_divisors(group.order())) p_parts[p];
  for (const auto& g : group.generators()) {
    const std::uint64_t m = g.order();
    for (std::uint64_t p : prime_divisors(m)) {
      const Permutation part = power(g, m / p_part(m, p));
      p_parts[p].push_back(part);
    }
  }
  SylowDecomposition result;
  for (auto& [p, gens] : p_parts) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    result.parts.push_back({p, PermGroup(group.degree(), std::move(gens))});
  }
  return result;
}

namespace {

std::vector<std::vector<Permutation>> orbit_kernels(
    const PermGroup& group, const OrbitPartition& partition) {
  if (partition.size() < 2) {
    throw NotIntransitive("zel is undefined for a group with fewer than two orbits");
  }
  std::vector<std::vector<Permutation>> kernels;
  kernels.reserve(partition.size());
  for (const auto& orbit : partition.classes) {
    kernels.push_back(pointwise_stabilizer(group, orbit).elements());
  }
  return kernels;
}

/// Pairwise intersection, in orbit order, of the kernels restricted to the
/// target orbit.
std::vector<Permutation> factor_elements(
    const std::vector<std::vector<Permutation>>& kernels,
    const OrbitPartition& partition, std::size_t target) {
  const PointSet& points = partition.classes.at(target);
  std::vector<Permutation> common;
  bool first = true;
  for (std::size_t other = 0; other < partition.size(); ++other) {
    if (other == target) continue;
    auto restricted = restrict_all(kernels[other], points);
    if (first) {
      common = std::move(restricted);
      first = false;
    } else {
      std::vector<Permutation> both;
      std::set_intersection(common.begin(), common.end(), restricted.begin(),
                            restricted.end(), std::back_inserter(both));
      common = std::move(both);
    }
  }
  return common;
}

}  // namespace

PermGroup zel_factor(const PermGroup& group, std::size_t orbit_index) {
  const OrbitPartition partition = orbits(group);
  const auto kernels = orbit_kernels(group, partition);
  return PermGroup::from_elements(
      partition.classes.at(orbit_index).size(),
      factor_elements(kernels, partition, orbit_index));
}

PermGroup zel(const PermGroup& group) {
  const OrbitPartition partition = orbits(group);
  const auto kernels = orbit_kernels(group, partition);
  std::vector<Permutation> gens;
  for (std::size_t target = 0; target < partition.size(); ++target) {
    const PointSet& points = partition.classes[target];
    const auto common = factor_elements(kernels, partition, target);
    for (const auto& g : extract_generators(points.size(), common)) {
      gens.push_back(extend_by_identity(g, points, group.degree()));
    }
  }
  return PermGroup(group.degree(), std::move(gens));
}

bool zel_condition(const PermGroup& group) { return is_subgroup(zel(group), group); }

std::optional<PointSet> has_unessential_witness(const PermGroup& group,
                                                std::span<const Point> orbit) {
  const OrbitPartition partition = orbits(group);
  const std::size_t target = require_orbit(partition, orbit);
  if (!is_quasiregular(group)) {
    throw NotQuasiregular("some transitive constituent is not regular");
  }
  const PointSet& points = partition.classes[target];
  for (std::size_t other = 0; other < partition.size(); ++other) {
    if (other == target) continue;
    const PermGroup kernel = pointwise_stabilizer(group, partition.classes[other]);
    if (restriction(kernel, points).is_trivial()) return partition.classes[other];
  }
  return std::nullopt;
}

PermGroup remove_orbit(const PermGroup& group, std::span<const Point> orbit) {
  const OrbitPartition partition = orbits(group);
  const std::size_t target = require_orbit(partition, orbit);
  PointSet rest;
  for (Point v = 0; v < group.degree(); ++v) {
    if (partition.point_to_class[v] != target) rest.push_back(v);
  }
  return restriction(group, rest);
}

}  // namespace twoclosure
