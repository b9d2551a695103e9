#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zeck/engine.hpp"

namespace zeck {

using NodeId = std::uint32_t;

struct Edge {
    Move move;
    NodeId child;
};

// Every state reachable from initial_state(n), interned once. Node 0 is the
// root; children keep legal_moves order. Built with an explicit work stack.
class StateGraph {
public:
    static StateGraph build(GameParams params, std::uint64_t n);

    GameParams params() const { return params_; }
    std::uint64_t n() const { return n_; }
    std::size_t size() const { return states_.size(); }
    static constexpr NodeId root() { return 0; }

    const GameState& state(NodeId id) const { return states_[id]; }
    const std::vector<Edge>& children(NodeId id) const { return children_[id]; }
    bool terminal(NodeId id) const { return children_[id].empty(); }
    std::optional<NodeId> find(const GameState& s) const;

    // Node ids ordered so that every child precedes its parents, derived from
    // the monovariant rank.
    const std::vector<NodeId>& bottom_up_order() const { return bottom_up_; }

private:
    GameParams params_{};
    std::uint64_t n_ = 0;
    std::vector<GameState> states_;
    std::vector<std::vector<Edge>> children_;
    std::unordered_map<GameState, NodeId> index_;
    std::vector<NodeId> bottom_up_;
};

}  // namespace zeck
