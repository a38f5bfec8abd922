#pragma once

#include <cstddef>
#include <cstdint>

#include "twoclosure/perm_group.hpp"

namespace twoclosure::fixtures {

/// Elementary abelian group of order p^2 on 3p points with three orbits
/// O1 = [0,p), O2 = [p,2p), O3 = [2p,3p). Generator a shifts O1 and O3 by
/// +1, b shifts O2 and O3 by +1; the point stabilizers on the three orbits
/// are <b>, <a> and <ab^-1>. Throws NotPrime.
PermGroup example1(std::uint64_t p);

/// Two copies of example1(p) on [0,3p) and [3p,6p), glued diagonally.
PermGroup example2(std::uint64_t p);

/// Regular cyclic group <(0 1 ... n-1)>.
PermGroup regular_cyclic(std::size_t n);

/// Klein four-group acting regularly on 4 points.
PermGroup klein_regular();

/// Abelian group with cyclic transitive constituents, deterministic from
/// `seed`. Orbits have prime-power sizes (or are fixed points), each carrying
/// a cyclic shift; every generator shifts several orbits at once. About half
/// of the instances are elementary abelian on three or more orbits of one
/// prime size. Points are shuffled so orbits are not contiguous.
PermGroup random_abelian_cyclic(std::uint64_t seed, std::size_t max_degree);

/// Like random_abelian_cyclic, but an orbit may carry a regular action of a
/// non-cyclic abelian group (C2×C2, C2×C4, C3×C3, C2×C2×C2).
PermGroup random_abelian(std::uint64_t seed, std::size_t max_degree);

/// A transitive (hence regular) abelian group: C_{m1}×...×C_{mk} acting on
/// itself, with at least 2 points and at most max_degree.
PermGroup random_regular_abelian(std::uint64_t seed, std::size_t max_degree);

}  // namespace twoclosure::fixtures
