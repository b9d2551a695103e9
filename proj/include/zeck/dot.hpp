#pragma once

#include <optional>
#include <string>

#include "zeck/graph.hpp"

namespace zeck {

struct DotOptions {
    std::optional<unsigned> depth_cap;  // layers below the root to emit
    bool unicode = false;               // wedge glyph in labels
};

// Two-player game tree in Graphviz DOT. A node is a (state, player to move)
// pair named "<canonical state>|P<mover>"; it is colored by the player who
// holds the winning strategy there (P1 blue, P2 red) and terminal nodes are
// drawn as filled double octagons. Edges carry move descriptors such as
// "carry(2)". Output is deterministic for fixed inputs.
std::string export_dot(const StateGraph& graph, const DotOptions& options = {});

}  // namespace zeck
