#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twoclosure/perm_group.hpp"

namespace twoclosure {

struct SylowPart {
  std::uint64_t prime;
  PermGroup group;  // acts on the full point set
};

/// Sylow subgroups of an abelian group, ordered by prime.
struct SylowDecomposition {
  std::vector<SylowPart> parts;

  std::vector<std::uint64_t> primes() const;
};

/// Each part P is generated by the p-parts g^(m/p^k) of the generators g of G
/// (m the order of g, p^k its p-part). Throws NotNilpotent for non-abelian G.
SylowDecomposition sylow_decomposition(const PermGroup& group);

/// ⋂_{Δ'≠Δ} (G_{Δ'})^Δ for the orbit Δ = orbits(G).classes[orbit_index],
/// as a group on |Δ| points relabeled by sorted order.
PermGroup zel_factor(const PermGroup& group, std::size_t orbit_index);

/// zel(G): the internal direct product over the orbits Δ of G of the factors
/// above, each extended by the identity outside Δ. Throws NotIntransitive for
/// groups with fewer than two orbits, where the product is undefined.
PermGroup zel(const PermGroup& group);

/// zel(G) ≤ G.
bool zel_condition(const PermGroup& group);

/// Some orbit Δ' ≠ `orbit` with (G_{Δ'})^Δ trivial. Throws NotQuasiregular or
/// NotAnOrbit.
std::optional<PointSet> has_unessential_witness(const PermGroup& group,
                                                std::span<const Point> orbit);

/// G^{Ω∖Δ}, relabeled. Throws NotAnOrbit.
PermGroup remove_orbit(const PermGroup& group, std::span<const Point> orbit);

}  // namespace twoclosure
