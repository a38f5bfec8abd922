#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twoclosure/perm_group.hpp"
#include "twoclosure/two_orbit.hpp"

namespace twoclosure {

/// Bounds for the brute-force automorphism search. Exceeding any of them
/// raises; results are never truncated.
struct SearchLimits {
  std::size_t max_degree = 14;
  std::uint64_t max_nodes = 50'000'000;
  std::size_t element_cap = PermGroup::kDefaultCap;
};

/// All permutations preserving `coloring`, sorted.
///
/// Depth-first assignment of images to points 0, 1, ... in order. A candidate
/// image must agree with the point on the diagonal color and on the color
/// multisets of its row and column, and every pair with an already assigned
/// point must keep its color. Top-level branches (the image of point 0) run
/// as OpenMP tasks; the result does not depend on scheduling.
std::vector<Permutation> automorphisms(const TwoOrbitColoring& coloring,
                                       const SearchLimits& limits = {});

/// Single-threaded reference for automorphisms().
std::vector<Permutation> automorphisms_serial(const TwoOrbitColoring& coloring,
                                              const SearchLimits& limits = {});

/// The 2-closure: Aut(orb2(G)), with its full element set.
PermGroup two_closure(const PermGroup& group, const SearchLimits& limits = {});
PermGroup two_closure_serial(const PermGroup& group,
                             const SearchLimits& limits = {});

/// |two_closure(G)| == |G|.
bool is_2_closed_oracle(const PermGroup& group, const SearchLimits& limits = {});

}  // namespace twoclosure
