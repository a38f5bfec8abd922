#include "twoclosure/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "twoclosure/errors.hpp"
#include "twoclosure/number_theory.hpp"

namespace twoclosure::fixtures {

namespace {

/// An orbit carrying the regular action of C_{f1}×...×C_{fk}; points are
/// mixed-radix tuples laid out from `offset`.
struct OrbitShape {
  std::vector<std::size_t> factors;
  std::size_t size() const {
    return std::accumulate(factors.begin(), factors.end(), std::size_t{1},
                           std::multiplies<>());
  }
};

/// Writes the images of the shift by `shift` on one orbit.
void apply_shift(const OrbitShape& shape, std::size_t offset,
                 const std::vector<std::size_t>& shift, std::vector<Point>& images) {
  const std::size_t size = shape.size();
  for (std::size_t x = 0; x < size; ++x) {
    std::size_t rest = x;
    std::size_t y = 0;
    std::size_t radix = 1;
    for (std::size_t f = 0; f < shape.factors.size(); ++f) {
      const std::size_t m = shape.factors[f];
      const std::size_t digit = rest % m;
      rest /= m;
      y += ((digit + shift[f]) % m) * radix;
      radix *= m;
    }
    images[offset + x] = static_cast<Point>(offset + y);
  }
}

PermGroup build(const std::vector<OrbitShape>& shapes,
                std::size_t generator_count, std::mt19937_64& rng) {
  const std::size_t degree = std::accumulate(
      shapes.begin(), shapes.end(), std::size_t{0},
      [](std::size_t acc, const OrbitShape& s) { return acc + s.size(); });
  // shifts[k][orbit][factor]
  std::vector<std::vector<std::vector<std::size_t>>> shifts(generator_count);
  for (auto& per_generator : shifts) {
    for (const auto& shape : shapes) {
      std::vector<std::size_t> shift;
      for (std::size_t m : shape.factors) {
        shift.push_back(std::uniform_int_distribution<std::size_t>(0, m - 1)(rng));
      }
      per_generator.push_back(std::move(shift));
    }
  }
  // Keep every declared orbit transitive: each factor of each orbit gets a
  // unit shift from one randomly chosen generator.
  for (std::size_t o = 0; o < shapes.size(); ++o) {
    for (std::size_t f = 0; f < shapes[o].factors.size(); ++f) {
      const std::size_t m = shapes[o].factors[f];
      std::size_t g = 0;
      for (const auto& per_generator : shifts) {
        g = std::gcd(g, per_generator[o][f]);
      }
      if (std::gcd(g, m) == 1) continue;
      const auto k = std::uniform_int_distribution<std::size_t>(0, generator_count - 1)(rng);
      for (auto& v : shifts[k][o]) v = 0;
      shifts[k][o][f] = 1;
    }
  }
  std::vector<Permutation> gens;
  for (const auto& per_generator : shifts) {
    std::vector<Point> images(degree);
    std::size_t offset = 0;
    for (std::size_t o = 0; o < shapes.size(); ++o) {
      apply_shift(shapes[o], offset, per_generator[o], images);
      offset += shapes[o].size();
    }
    gens.emplace_back(std::move(images));
  }
  std::vector<Point> order(degree);
  std::iota(order.begin(), order.end(), Point{0});
  std::shuffle(order.begin(), order.end(), rng);
  return relabel(PermGroup(degree, std::move(gens)), Permutation(std::move(order)));
}

std::vector<OrbitShape> random_shapes(std::mt19937_64& rng, std::size_t max_degree,
                                      bool allow_noncyclic) {
  static const std::vector<OrbitShape> cyclic = {
      {{2}}, {{3}}, {{4}}, {{5}}, {{7}}, {{8}}, {{9}}};
  static const std::vector<OrbitShape> noncyclic = {
      {{2, 2}}, {{2, 4}}, {{3, 3}}, {{2, 2, 2}}};
  const std::size_t target = std::uniform_int_distribution<std::size_t>(
      std::max<std::size_t>(1, max_degree / 2), std::max<std::size_t>(1, max_degree))(rng);
  // Half of the instances draw every nontrivial orbit from one prime; those
  // are the p-groups where the zel and removal reductions do real work.
  const std::size_t prime = std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 3;
  const bool single_prime = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  std::vector<OrbitShape> shapes;
  std::size_t used = 0;
  while (used < target) {
    std::vector<OrbitShape> fitting;
    auto consider = [&](const OrbitShape& s) {
      if (used + s.size() > target) return;
      if (single_prime && p_part(s.size(), prime) != s.size()) return;
      fitting.push_back(s);
    };
    for (const auto& s : cyclic) consider(s);
    if (allow_noncyclic) {
      for (const auto& s : noncyclic) consider(s);
    }
    if (fitting.empty() || std::uniform_int_distribution<int>(0, 7)(rng) == 0) {
      shapes.push_back({{1}});
      ++used;
      continue;
    }
    const OrbitShape pick =
        fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
    shapes.push_back(pick);
    used += pick.size();
  }
  return shapes;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

}  // namespace

PermGroup example1(std::uint64_t p) {
  require_prime(p);
  const std::size_t n = 3 * p;
  std::vector<Point> a(n), b(n);
  std::iota(a.begin(), a.end(), Point{0});
  std::iota(b.begin(), b.end(), Point{0});
  for (std::size_t i = 0; i < p; ++i) {
    const auto shift = static_cast<Point>((i + 1) % p);
    a[i] = shift;
    a[2 * p + i] = static_cast<Point>(2 * p) + shift;
    b[p + i] = static_cast<Point>(p) + shift;
    b[2 * p + i] = static_cast<Point>(2 * p) + shift;
  }
  return PermGroup(n, {Permutation(std::move(a)), Permutation(std::move(b))});
}

PermGroup example2(std::uint64_t p) {
  const PermGroup base = example1(p);
  const std::size_t half = base.degree();
  std::vector<Permutation> gens;
  for (const auto& g : base.generators()) {
    std::vector<Point> images(2 * half);
    for (Point i = 0; i < half; ++i) {
      images[i] = g[i];
      images[half + i] = static_cast<Point>(half) + g[i];
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(2 * half, std::move(gens));
}

PermGroup regular_cyclic(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(n);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(std::move(images))});
}

PermGroup klein_regular() {
  return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                       Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup random_abelian_cyclic(std::uint64_t seed, std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  if (max_degree >= 6 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    // Elementary abelian on several orbits of one prime size, with a fixed
    // point now and then.
    const std::size_t p = max_degree >= 9 && std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? 3 : 2;
    const std::size_t count_orbits = std::uniform_int_distribution<std::size_t>(
        3, max_degree / p)(rng);
    std::vector<OrbitShape> shapes(count_orbits, OrbitShape{{p}});
    if (count_orbits * p < max_degree && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      shapes.push_back({{1}});
    }
    const std::size_t generators = p == 2 ? std::uniform_int_distribution<std::size_t>(2, 3)(rng) : 2;
    return build(shapes, generators, rng);
  }
  const auto shapes = random_shapes(rng, max_degree, false);
  const auto count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  return build(shapes, count, rng);
}

PermGroup random_abelian(std::uint64_t seed, std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  const auto shapes = random_shapes(rng, max_degree, true);
  const auto count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  return build(shapes, count, rng);
}

PermGroup random_regular_abelian(std::uint64_t seed, std::size_t max_degree) {
  if (max_degree < 2) throw PreconditionFailed("a regular group needs at least 2 points");
  std::mt19937_64 rng(seed);
  OrbitShape shape;
  std::size_t size = 1;
  do {
    std::vector<std::size_t> fitting;
    for (std::size_t m = 2; size * m <= max_degree; ++m) fitting.push_back(m);
    if (fitting.empty()) break;
    const std::size_t m =
        fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
    shape.factors.push_back(m);
    size *= m;
  } while (std::uniform_int_distribution<int>(0, 1)(rng) == 0);

  std::vector<Permutation> gens;
  for (std::size_t f = 0; f < shape.factors.size(); ++f) {
    std::vector<std::size_t> shift(shape.factors.size(), 0);
    shift[f] = 1;
    std::vector<Point> images(size);
    apply_shift(shape, 0, shift, images);
    gens.emplace_back(std::move(images));
  }
  std::vector<Point> order(size);
  std::iota(order.begin(), order.end(), Point{0});
  std::shuffle(order.begin(), order.end(), rng);
  return relabel(PermGroup(size, std::move(gens)), Permutation(std::move(order)));
}

}  // namespace twoclosure::fixtures
