#pragma once

#include <string>
#include <string_view>

#include "twoclosure/perm_group.hpp"

namespace twoclosure {

/// Group file format:
///
///   # comment
///   degree 6
///   gen (0 1)(2 3 4)
///   gen [1,0,2,3,5,4]
///
/// `degree N` comes first; each `gen` line gives one generator in disjoint
/// cycle notation or as an image list. `gen ()` is the identity.
/// Throws ParseError (with line and column) or InvalidPermutation.
PermGroup parse_group(std::string_view text);

/// Canonical text: the degree line, then one `gen` line per generator in
/// cycle notation.
std::string serialize_group(const PermGroup& group);

/// Reads one permutation written as cycles or an image list.
Permutation parse_permutation(std::string_view text, std::size_t degree);

}  // namespace twoclosure
