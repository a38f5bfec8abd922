#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twoclosure {

using Point = std::uint32_t;

/// A bijection of {0..n-1}; point i maps to images()[i].
///
/// Composition convention: compose(p, q) applies p first, then q, matching
/// the exponent notation a^(pq) = (a^p)^q.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation of `degree` points from disjoint cycles.
  static Permutation from_cycles(
      std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }
  Point operator[](Point i) const noexcept { return images_[i]; }

  bool is_identity() const noexcept;
  std::uint64_t order() const;

  /// Disjoint cycles of length >= 2, each starting at its minimal point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// "(0 1 2)(3 4)"; the identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

/// Result maps i to q[p[i]].
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t exponent);

/// p^-1 * q * p in the "p then q" convention: relabels points of q by p.
Permutation conjugate(const Permutation& q, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace twoclosure
