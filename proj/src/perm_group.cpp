#include "twoclosure/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "twoclosure/errors.hpp"
#include "twoclosure/number_theory.hpp"

namespace twoclosure {

namespace {

void check_degree(const Permutation& p, std::size_t degree) {
  if (p.degree() != degree) {
    throw DegreeMismatch("generator of degree " + std::to_string(p.degree()) +
                         " in group of degree " + std::to_string(degree));
  }
}

PointSet sorted_points(std::span<const Point> points, std::size_t degree) {
  PointSet result(points.begin(), points.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  for (Point v : result) {
    if (v >= degree) {
      throw InvalidPermutation("point " + std::to_string(v) +
                               " out of range for degree " +
                               std::to_string(degree));
    }
  }
  return result;
}

std::vector<bool> membership_mask(const PointSet& points, std::size_t degree) {
  std::vector<bool> mask(degree, false);
  for (Point v : points) mask[v] = true;
  return mask;
}

std::vector<Permutation> normalized_generators(std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      memo_(std::make_shared<Memo>()) {
  for (const auto& g : generators_) check_degree(g, degree_);
}

PermGroup PermGroup::from_elements(std::size_t degree,
                                   std::vector<Permutation> elements) {
  for (const auto& e : elements) check_degree(e, degree);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) elements.push_back(Permutation::identity(degree));
  PermGroup group(degree, extract_generators(degree, elements));
  group.memo_->elements = std::move(elements);
  return group;
}

const std::vector<Permutation>& PermGroup::elements(std::size_t cap) const {
  std::lock_guard lock(memo_->mutex);
  if (!memo_->elements) {
    memo_->elements = generate_elements(degree_, generators_, cap);
  } else if (memo_->elements->size() > cap) {
    throw CapExceeded(memo_->elements->size(), cap);
  }
  return *memo_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  const auto& elems = elements();
  return std::binary_search(elems.begin(), elems.end(), p);
}

bool PermGroup::is_trivial() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

std::vector<Permutation> generate_elements(
    std::size_t degree, std::span<const Permutation> generators,
    std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded(seen.size(), cap);
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Permutation> extract_generators(
    std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{
      Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    auto closure = generate_elements(degree, gens, elements.size());
    span = {closure.begin(), closure.end()};
  }
  return gens;
}

std::optional<std::size_t> OrbitPartition::find_class(
    std::span<const Point> points) const {
  if (points.empty()) return std::nullopt;
  PointSet sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= point_to_class.size()) return std::nullopt;
  const std::size_t idx = point_to_class[sorted.front()];
  if (classes[idx] == sorted) return idx;
  return std::nullopt;
}

std::vector<std::size_t> OrbitPartition::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.size());
  return sizes;
}

OrbitPartition orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& g : group.generators()) {
    for (Point i = 0; i < n; ++i) {
      const Point a = find(i);
      const Point b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition result;
  result.point_to_class.assign(n, 0);
  std::vector<std::size_t> root_to_class(n, n);
  for (Point i = 0; i < n; ++i) {
    const Point r = find(i);
    if (root_to_class[r] == n) {
      root_to_class[r] = result.classes.size();
      result.classes.emplace_back();
    }
    result.point_to_class[i] = root_to_class[r];
    result.classes[root_to_class[r]].push_back(i);
  }
  return result;
}

bool is_transitive(const PermGroup& group) { return orbits(group).size() == 1; }

PermGroup pointwise_stabilizer(const PermGroup& group,
                               std::span<const Point> points) {
  const PointSet fixed = sorted_points(points, group.degree());
  std::vector<Permutation> kept;
  for (const auto& g : group.elements()) {
    if (std::all_of(fixed.begin(), fixed.end(),
                    [&](Point v) { return g[v] == v; })) {
      kept.push_back(g);
    }
  }
  return PermGroup::from_elements(group.degree(), std::move(kept));
}

PermGroup setwise_stabilizer(const PermGroup& group,
                             std::span<const Point> points) {
  const PointSet set = sorted_points(points, group.degree());
  const auto mask = membership_mask(set, group.degree());
  std::vector<Permutation> kept;
  for (const auto& g : group.elements()) {
    if (std::all_of(set.begin(), set.end(), [&](Point v) { return mask[g[v]]; })) {
      kept.push_back(g);
    }
  }
  return PermGroup::from_elements(group.degree(), std::move(kept));
}

Permutation restrict_permutation(const Permutation& p,
                                 std::span<const Point> sorted_points) {
  std::vector<Point> images(sorted_points.size());
  for (std::size_t k = 0; k < sorted_points.size(); ++k) {
    const Point target = p[sorted_points[k]];
    auto it = std::lower_bound(sorted_points.begin(), sorted_points.end(), target);
    if (it == sorted_points.end() || *it != target) {
      throw NotInvariant("point " + std::to_string(sorted_points[k]) +
                         " is mapped to " + std::to_string(target) +
                         " outside the set");
    }
    images[k] = static_cast<Point>(it - sorted_points.begin());
  }
  return Permutation(std::move(images));
}

Permutation extend_by_identity(const Permutation& p,
                               std::span<const Point> sorted_points,
                               std::size_t degree) {
  if (p.degree() != sorted_points.size()) {
    throw DegreeMismatch("cannot extend a permutation of degree " +
                         std::to_string(p.degree()) + " over " +
                         std::to_string(sorted_points.size()) + " points");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t k = 0; k < sorted_points.size(); ++k) {
    images[sorted_points[k]] = sorted_points[p[static_cast<Point>(k)]];
  }
  return Permutation(std::move(images));
}

PermGroup restriction(const PermGroup& group, std::span<const Point> points) {
  const PointSet set = sorted_points(points, group.degree());
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) {
    gens.push_back(restrict_permutation(g, set));
  }
  return PermGroup(set.size(), normalized_generators(std::move(gens)));
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) {
    throw DegreeMismatch("subgroup test across degrees " +
                         std::to_string(sub.degree()) + " and " +
                         std::to_string(group.degree()));
  }
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return group.contains(g); });
}

PermGroup induced_on_orbits(const PermGroup& group, const PermGroup& normal) {
  if (group.degree() != normal.degree()) {
    throw DegreeMismatch("induced action across degrees " +
                         std::to_string(group.degree()) + " and " +
                         std::to_string(normal.degree()));
  }
  const OrbitPartition blocks = orbits(normal);
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> images(blocks.size());
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      const auto& block = blocks.classes[c];
      const std::size_t target = blocks.point_to_class[g[block.front()]];
      const bool whole =
          blocks.classes[target].size() == block.size() &&
          std::all_of(block.begin(), block.end(), [&](Point v) {
            return blocks.point_to_class[g[v]] == target;
          });
      if (!whole) {
        throw NotBlockSystem("generator " + g.to_cycle_string() +
                             " does not map the orbit starting at " +
                             std::to_string(block.front()) + " onto an orbit");
      }
      images[c] = static_cast<Point>(target);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(blocks.size(), normalized_generators(std::move(gens)));
}

bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> p_group_prime(const PermGroup& group) {
  const auto primes = prime_divisors(group.order());
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

bool cyclic_constituents(const PermGroup& group) {
  for (const auto& orbit : orbits(group).classes) {
    const PermGroup constituent = restriction(group, orbit);
    const auto& elems = constituent.elements();
    const bool cyclic = std::any_of(elems.begin(), elems.end(), [&](const auto& e) {
      return e.order() == elems.size();
    });
    if (!cyclic) return false;
  }
  return true;
}

bool is_quasiregular(const PermGroup& group) {
  for (const auto& orbit : orbits(group).classes) {
    if (restriction(group, orbit).order() != orbit.size()) return false;
  }
  return true;
}

PermGroup relabel(const PermGroup& group, const Permutation& relabel) {
  if (relabel.degree() != group.degree()) {
    throw DegreeMismatch("relabeling of degree " +
                         std::to_string(relabel.degree()) +
                         " for group of degree " + std::to_string(group.degree()));
  }
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) gens.push_back(conjugate(g, relabel));
  return PermGroup(group.degree(), std::move(gens));
}

}  // namespace twoclosure
