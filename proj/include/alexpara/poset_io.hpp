#pragma once

#include <optional>
#include <string>

#include "alexpara/poset.hpp"

namespace alexpara {

/// Schema: {"elements":["a",...],"covers":[["a","b"],...]}.
/// The order is rebuilt by reflexive-transitive closure on load.
std::string poset_to_json(const FinitePoset& p, int indent = -1);
FinitePoset poset_from_json(const std::string& text);

/// Hasse diagram in DOT, one arrow per cover edge, elements ranked by
/// height level. `highlight` draws that node filled.
std::string poset_to_dot(const FinitePoset& p,
                         const std::optional<std::string>& highlight = std::nullopt,
                         const std::string& graph_name = "hasse");

}  // namespace alexpara
