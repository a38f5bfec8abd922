#include "twoclosure/permutation.hpp"

#include <numeric>
#include <sstream>

#include "twoclosure/errors.hpp"

namespace twoclosure {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size()) {
      throw InvalidPermutation("point " + std::to_string(v) +
                               " out of range for degree " +
                               std::to_string(images_.size()));
    }
    if (seen[v]) {
      throw InvalidPermutation("point " + std::to_string(v) +
                               " appears twice as an image");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point v : cycle) {
      if (v >= degree) {
        throw InvalidPermutation("point " + std::to_string(v) +
                                 " out of range for degree " +
                                 std::to_string(degree));
      }
      if (used[v]) {
        throw InvalidPermutation("point " + std::to_string(v) +
                                 " appears in more than one cycle position");
      }
      used[v] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point v = start; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i) images[i] = q[p[i]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i) images[p[i]] = i;
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t exponent) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (exponent) {
    if (exponent & 1U) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1U;
  }
  return result;
}

Permutation conjugate(const Permutation& q, const Permutation& p) {
  return compose(compose(inverse(p), q), p);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace twoclosure
