#include "twoclosure/two_orbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twoclosure/errors.hpp"

namespace twoclosure {

TwoOrbitColoring TwoOrbitColoring::from_labels(
    std::size_t degree, const std::vector<std::size_t>& labels) {
  if (labels.size() != degree * degree) {
    throw DegreeMismatch("pair labelling has " + std::to_string(labels.size()) +
                         " entries for degree " + std::to_string(degree));
  }
  TwoOrbitColoring result;
  result.degree_ = degree;
  result.colors_.resize(labels.size());
  std::vector<Color> fresh(labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1,
                           static_cast<Color>(-1));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    Color& c = fresh[labels[k]];
    if (c == static_cast<Color>(-1)) c = static_cast<Color>(result.num_colors_++);
    result.colors_[k] = c;
  }
  return result;
}

std::string TwoOrbitColoring::to_text() const {
  std::ostringstream out;
  for (std::size_t a = 0; a < degree_; ++a) {
    for (std::size_t b = 0; b < degree_; ++b) {
      if (b) out << ' ';
      out << colors_[a * degree_ + b];
    }
    out << '\n';
  }
  return out.str();
}

TwoOrbitColoring TwoOrbitColoring::from_text(std::string_view text) {
  std::vector<std::vector<std::size_t>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<std::size_t> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::size_t value = 0;
      try {
        value = std::stoul(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError(line_no, line.find(token) + 1,
                         "expected a color id, got '" + token + "'");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  std::vector<std::size_t> labels;
  labels.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw ParseError(a + 1, 1, "row has " + std::to_string(rows[a].size()) +
                                     " entries, expected " + std::to_string(n));
    }
    labels.insert(labels.end(), rows[a].begin(), rows[a].end());
  }
  return from_labels(n, labels);
}

TwoOrbitColoring orb2(const PermGroup& group) {
  const std::size_t n = group.degree();
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& g : group.generators()) {
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        const std::size_t x = find(a * n + b);
        const std::size_t y = find(static_cast<std::size_t>(g[a]) * n + g[b]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  std::vector<std::size_t> labels(n * n);
  for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = find(k);
  return TwoOrbitColoring::from_labels(n, labels);
}

bool preserves(const TwoOrbitColoring& coloring, const Permutation& p) {
  if (coloring.degree() != p.degree()) {
    throw DegreeMismatch("coloring of degree " +
                         std::to_string(coloring.degree()) +
                         " tested against permutation of degree " +
                         std::to_string(p.degree()));
  }
  const auto n = static_cast<Point>(coloring.degree());
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if (coloring(a, b) != coloring(p[a], p[b])) return false;
    }
  }
  return true;
}

bool same_coloring(const TwoOrbitColoring& a, const TwoOrbitColoring& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("colorings of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  return a.matrix() == b.matrix();
}

}  // namespace twoclosure
