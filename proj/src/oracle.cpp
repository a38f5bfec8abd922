#include "twoclosure/oracle.hpp"

#include <algorithm>
#include <atomic>

#include "twoclosure/errors.hpp"

namespace twoclosure {

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const TwoOrbitColoring& coloring, const SearchLimits& limits)
      : coloring_(coloring), limits_(limits), n_(coloring.degree()) {
    if (n_ > limits.max_degree) {
      throw BudgetExceeded("degree " + std::to_string(n_) +
                           " is above the oracle bound " +
                           std::to_string(limits.max_degree));
    }
    std::vector<std::vector<Color>> rows(n_), cols(n_);
    for (Point a = 0; a < n_; ++a) {
      for (Point b = 0; b < n_; ++b) {
        rows[a].push_back(coloring(a, b));
        cols[a].push_back(coloring(b, a));
      }
      std::sort(rows[a].begin(), rows[a].end());
      std::sort(cols[a].begin(), cols[a].end());
    }
    candidates_.resize(n_);
    for (Point a = 0; a < n_; ++a) {
      for (Point x = 0; x < n_; ++x) {
        if (coloring(a, a) == coloring(x, x) && rows[a] == rows[x] &&
            cols[a] == cols[x]) {
          candidates_[a].push_back(x);
        }
      }
    }
  }

  std::size_t degree() const noexcept { return n_; }
  const std::vector<Point>& top_level() const { return candidates_.front(); }
  bool aborted() const noexcept { return aborted_.load(std::memory_order_relaxed); }

  /// Every automorphism with point 0 mapped to `first`.
  std::vector<Permutation> branch(Point first) {
    std::vector<Permutation> found;
    std::vector<Point> images(n_);
    std::vector<bool> used(n_, false);
    images[0] = first;
    used[first] = true;
    if (visit()) extend(1, images, used, found);
    return found;
  }

 private:
  bool visit() {
    if (aborted()) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > limits_.max_nodes) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool consistent(Point point, Point image, const std::vector<Point>& images) const {
    for (Point j = 0; j < point; ++j) {
      if (coloring_(j, point) != coloring_(images[j], image) ||
          coloring_(point, j) != coloring_(image, images[j])) {
        return false;
      }
    }
    return true;
  }

  void extend(Point point, std::vector<Point>& images, std::vector<bool>& used,
              std::vector<Permutation>& found) {
    if (point == n_) {
      found.emplace_back(images);
      if (found.size() > limits_.element_cap) aborted_.store(true);
      return;
    }
    for (Point x : candidates_[point]) {
      if (used[x] || !consistent(point, x, images)) continue;
      if (!visit()) return;
      images[point] = x;
      used[x] = true;
      extend(point + 1, images, used, found);
      used[x] = false;
      if (aborted()) return;
    }
  }

  const TwoOrbitColoring& coloring_;
  SearchLimits limits_;
  std::size_t n_;
  std::vector<std::vector<Point>> candidates_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

std::vector<Permutation> finish(std::vector<Permutation> found,
                                const AutomorphismSearch& search,
                                const SearchLimits& limits) {
  if (found.size() > limits.element_cap) {
    throw CapExceeded(found.size(), limits.element_cap);
  }
  if (search.aborted()) {
    throw BudgetExceeded("automorphism search exceeded " +
                         std::to_string(limits.max_nodes) + " nodes");
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<Permutation> automorphisms_serial(const TwoOrbitColoring& coloring,
                                              const SearchLimits& limits) {
  AutomorphismSearch search(coloring, limits);
  if (search.degree() == 0) return {Permutation::identity(0)};
  std::vector<Permutation> found;
  for (Point first : search.top_level()) {
    auto part = search.branch(first);
    found.insert(found.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    if (search.aborted()) break;
  }
  return finish(std::move(found), search, limits);
}

std::vector<Permutation> automorphisms(const TwoOrbitColoring& coloring,
                                       const SearchLimits& limits) {
  AutomorphismSearch search(coloring, limits);
  if (search.degree() == 0) return {Permutation::identity(0)};
  const auto& roots = search.top_level();
  std::vector<std::vector<Permutation>> parts(roots.size());
  const auto count = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    parts[k] = search.branch(roots[k]);
  }
  std::vector<Permutation> found;
  for (auto& part : parts) {
    found.insert(found.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  return finish(std::move(found), search, limits);
}

PermGroup two_closure(const PermGroup& group, const SearchLimits& limits) {
  return PermGroup::from_elements(group.degree(),
                                  automorphisms(orb2(group), limits));
}

PermGroup two_closure_serial(const PermGroup& group, const SearchLimits& limits) {
  return PermGroup::from_elements(group.degree(),
                                  automorphisms_serial(orb2(group), limits));
}

bool is_2_closed_oracle(const PermGroup& group, const SearchLimits& limits) {
  return two_closure(group, limits).order() == group.order(limits.element_cap);
}

}  // namespace twoclosure
