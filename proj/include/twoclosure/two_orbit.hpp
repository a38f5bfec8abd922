#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twoclosure/perm_group.hpp"

namespace twoclosure {

using Color = std::uint32_t;

/// orb_2(G) as a coloring of Ω×Ω: pairs share a color iff they lie in the
/// same orbit of G on ordered pairs. Colors are numbered by first occurrence
/// in row-major order, so equal partitions give equal matrices.
class TwoOrbitColoring {
 public:
  TwoOrbitColoring() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t num_colors() const noexcept { return num_colors_; }
  Color operator()(Point a, Point b) const noexcept {
    return colors_[static_cast<std::size_t>(a) * degree_ + b];
  }
  const std::vector<Color>& matrix() const noexcept { return colors_; }

  /// Rows of space-separated color ids, one row per line.
  std::string to_text() const;
  static TwoOrbitColoring from_text(std::string_view text);

  /// Renumbers an arbitrary pair labelling canonically.
  static TwoOrbitColoring from_labels(std::size_t degree,
                                      const std::vector<std::size_t>& labels);

  friend bool operator==(const TwoOrbitColoring&,
                         const TwoOrbitColoring&) = default;

 private:
  std::size_t degree_ = 0;
  std::size_t num_colors_ = 0;
  std::vector<Color> colors_;
};

/// Orbits of G on ordered pairs; needs only the generators.
TwoOrbitColoring orb2(const PermGroup& group);

/// color(a, b) == color(a^p, b^p) for all pairs.
bool preserves(const TwoOrbitColoring& coloring, const Permutation& p);

/// The two partitions of Ω×Ω coincide (2-equivalence).
bool same_coloring(const TwoOrbitColoring& a, const TwoOrbitColoring& b);

}  // namespace twoclosure
