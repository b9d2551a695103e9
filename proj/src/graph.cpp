#include "zeck/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeck {

StateGraph StateGraph::build(GameParams params, std::uint64_t n) {
    params.validate();
    // Overflow surfaces here, before any move is generated.
    (void)generate_terms(params, n);

    StateGraph g;
    g.params_ = params;
    g.n_ = n;

    auto intern = [&g](GameState s) -> std::pair<NodeId, bool> {
        auto [it, inserted] = g.index_.try_emplace(s, static_cast<NodeId>(g.states_.size()));
        if (inserted) {
            g.states_.push_back(std::move(s));
            g.children_.emplace_back();
        }
        return {it->second, inserted};
    };

    intern(initial_state(n));
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        std::vector<Edge> edges;
        for (const Move m : legal_moves(params, g.states_[id])) {
            auto [child, fresh] = intern(apply_move(params, g.states_[id], m));
            edges.push_back({m, child});
            if (fresh) stack.push_back(child);
        }
        g.children_[id] = std::move(edges);
    }

    std::vector<MonovariantRank> rank(g.states_.size());
    for (std::size_t i = 0; i < g.states_.size(); ++i) rank[i] = monovariant_rank(g.states_[i]);
    g.bottom_up_.resize(g.states_.size());
    for (std::size_t i = 0; i < g.states_.size(); ++i) g.bottom_up_[i] = static_cast<NodeId>(i);
    std::stable_sort(g.bottom_up_.begin(), g.bottom_up_.end(),
                     [&rank](NodeId a, NodeId b) { return rank[a] < rank[b]; });
    for (std::size_t i = 0; i < g.states_.size(); ++i)
        for (const Edge& e : g.children_[i])
            if (!(rank[e.child] < rank[i]))
                throw std::logic_error("monovariant did not decrease along " + to_string(e.move) + " from " +
                                       canonical_encode(g.states_[i]));
    return g;
}

std::optional<NodeId> StateGraph::find(const GameState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace zeck
