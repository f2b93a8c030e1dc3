#pragma once
#include <optional>
#include <string>

#include "fsg/group.hpp"
#include "fsg/transducer.hpp"

namespace fsg {

// tree   := "I" | ("a"|"b") "(" tree "," tree ")"
// forest := tree ("," tree)*
Tree parse_tree(const std::string& text);
Forest parse_forest(const std::string& text);

// [ <tree> | id | <tree> ] , [ <tree> | rot(k) | <tree> ],
// [ <tree> | perm(i1 i2 ... im) | <tree> ]
// Without a requested type the smallest fitting tag is used (id -> F,
// rotation -> T, general -> V).
GroupElement parse_element(const std::string& text, const SkeinContext& ctx,
                           std::optional<GroupType> requested = std::nullopt);

// u(p) meaning u followed by p repeated, bits only, e.g. "1(0)".
RationalPoint parse_point(const std::string& text);

}  // namespace fsg
