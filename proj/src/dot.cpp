#include "zeck/dot.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "zeck/solver.hpp"

namespace zeck {

namespace {

const char* kColor[2] = {"blue", "red"};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const StateGraph& g, const DotOptions& opt) {
    const TwoPlayerTable table(g);
    const GameParams params = g.params();

    using Key = std::pair<NodeId, int>;  // (node, mover 0/1)
    std::map<Key, unsigned> depth;
    std::vector<Key> order;
    std::deque<Key> queue;
    const Key root{StateGraph::root(), 0};
    depth[root] = 0;
    order.push_back(root);
    queue.push_back(root);

    std::ostringstream edges;
    while (!queue.empty()) {
        const Key cur = queue.front();
        queue.pop_front();
        const unsigned d = depth[cur];
        if (opt.depth_cap && d >= *opt.depth_cap) continue;
        for (const Edge& e : g.children(cur.first)) {
            const Key next{e.child, 1 - cur.second};
            if (!depth.contains(next)) {
                depth[next] = d + 1;
                order.push_back(next);
                queue.push_back(next);
            }
            edges << "  " << quoted(canonical_encode(g.state(cur.first)) + "|P" + std::to_string(cur.second + 1))
                  << " -> " << quoted(canonical_encode(g.state(next.first)) + "|P" + std::to_string(next.second + 1))
                  << " [label=" << quoted(to_string(e.move)) << "];\n";
        }
    }

    std::ostringstream out;
    out << "digraph zeckendorf {\n";
    out << "  graph [rankdir=TB, label=" << quoted("(c,k)=" + params.to_string() + " n=" + std::to_string(g.n()))
        << "];\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const Key& key : order) {
        const auto [id, mover] = key;
        const std::string name = canonical_encode(g.state(id)) + "|P" + std::to_string(mover + 1);
        out << "  " << quoted(name) << " [label=" << quoted(wedge_notation(params, g.state(id), opt.unicode));
        if (id == StateGraph::root() && g.terminal(id)) {
            out << ", color=gray, style=dashed";
        } else {
            const int holder = table.mover_wins(id) ? mover : 1 - mover;
            out << ", color=" << kColor[holder];
            if (g.terminal(id)) out << ", style=filled, fillcolor=" << kColor[holder] << ", fontcolor=white"
                                    << ", shape=doubleoctagon";
        }
        out << "];\n";
    }
    out << edges.str();
    out << "}\n";
    return out.str();
}

}  // namespace zeck
