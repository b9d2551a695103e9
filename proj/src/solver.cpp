#include "zeck/solver.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <set>

namespace zeck {

// ---- TurnModel ------------------------------------------------------------

TurnModel TurnModel::two_player() { return singletons(2); }

TurnModel TurnModel::singletons(int players) {
    if (players < 1) throw ConfigError("need at least one player");
    TurnModel m;
    for (int s = 0; s < players; ++s) {
        m.team_of.push_back(s);
        m.team_names.push_back("P" + std::to_string(s + 1));
    }
    return m;
}

TurnModel TurnModel::from_seating(std::string_view seating) {
    if (seating.empty()) throw ConfigError("seating string is empty");
    std::set<char> letters;
    for (std::size_t i = 0; i < seating.size(); ++i) {
        const char ch = seating[i];
        if (!((ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z')))
            throw ConfigError("seating must be letters, got '" + std::string(1, ch) + "' at seat " +
                              std::to_string(i + 1));
        letters.insert(ch);
    }
    TurnModel m;
    for (char ch : letters) m.team_names.emplace_back(1, ch);
    for (char ch : seating)
        m.team_of.push_back(static_cast<int>(std::distance(letters.begin(), letters.find(ch))));
    return m;
}

bool TurnModel::singleton_teams() const {
    if (team_of.size() != team_names.size()) return false;
    for (std::size_t s = 0; s < team_of.size(); ++s)
        if (team_of[s] != static_cast<int>(s)) return false;
    return true;
}

std::string TurnModel::seating() const {
    if (singleton_teams()) return "";
    std::string out;
    for (int t : team_of) out += team_names[t];
    return out;
}

int TurnModel::seat_for_turn(std::uint64_t turn) const {
    return static_cast<int>((turn - 1) % team_of.size());
}

TurnModel TurnModel::with_focal(int team) const {
    TurnModel m = *this;
    m.focal = team;
    m.validate();
    return m;
}

void TurnModel::validate() const {
    if (team_of.empty()) throw ConfigError("turn model has no seats");
    std::vector<bool> seen(team_names.size(), false);
    for (std::size_t s = 0; s < team_of.size(); ++s) {
        const int t = team_of[s];
        if (t < 0 || t >= static_cast<int>(team_names.size()))
            throw ConfigError("seat " + std::to_string(s + 1) + " assigned to unknown team " + std::to_string(t));
        seen[t] = true;
    }
    for (std::size_t t = 0; t < seen.size(); ++t)
        if (!seen[t]) throw ConfigError("team " + team_names[t] + " has no seats");
    if (focal && (*focal < 0 || *focal >= teams()))
        throw ConfigError("focal team " + std::to_string(*focal) + " out of range");
}

std::string to_string(SolveMode mode) {
    switch (mode) {
        case SolveMode::TwoPlayer: return "two_player";
        case SolveMode::Multiplayer: return "multiplayer";
        case SolveMode::Team: return "team";
    }
    return "?";
}

SolveMode mode_of(const TurnModel& model) {
    if (!model.singleton_teams()) return SolveMode::Team;
    return model.players() == 2 ? SolveMode::TwoPlayer : SolveMode::Multiplayer;
}

std::vector<std::string> SolveReport::winner_names() const {
    std::vector<std::string> out;
    for (int t : winners) out.push_back(model.team_names.at(t));
    return out;
}

std::string policy_digest(const Policy& policy) {
    std::uint64_t h = 14695981039346656037ull;
    auto feed = [&h](std::string_view s) {
        for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
    };
    for (const auto& [key, move] : policy) {
        feed(key.first);
        feed("|");
        feed(std::to_string(key.second));
        feed("|");
        feed(to_string(move));
        feed("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- Evaluator ------------------------------------------------------------

Evaluator::Evaluator(const StateGraph& graph, const TurnModel& model, int team)
    : graph_(&graph),
      model_(&model),
      team_(team),
      players_(model.players()),
      offset_mode_(model.singleton_teams()),
      memo_(graph.size() * static_cast<std::size_t>(model.players()), -1) {
    model.validate();
    if (team < 0 || team >= model.teams()) throw ConfigError("team out of range");
}

void Evaluator::set_team(int team) {
    if (team < 0 || team >= model_->teams()) throw ConfigError("team out of range");
    if (team == team_) return;
    team_ = team;
    if (!offset_mode_) std::fill(memo_.begin(), memo_.end(), std::int8_t{-1});
}

int Evaluator::slot(int seat) const {
    if (offset_mode_) return ((team_ - seat) % players_ + players_) % players_;
    return seat;
}

bool Evaluator::focal_mover(int slot) const {
    return offset_mode_ ? slot == 0 : model_->team_of[slot] == team_;
}

int Evaluator::next_slot(int slot) const {
    return offset_mode_ ? (slot + players_ - 1) % players_ : (slot + 1) % players_;
}

bool Evaluator::terminal_value(int slot) const {
    if (offset_mode_) return (slot + 1) % players_ == 0;
    return model_->team_of[(slot + players_ - 1) % players_] == team_;
}

std::size_t Evaluator::memo_entries() const {
    return static_cast<std::size_t>(std::count_if(memo_.begin(), memo_.end(), [](std::int8_t v) { return v >= 0; }));
}

void Evaluator::evaluate(NodeId root, int root_slot) {
    struct Frame {
        NodeId id;
        int slot;
        std::size_t cursor;
    };
    std::vector<Frame> stack{{root, root_slot, 0}};
    while (!stack.empty()) {
        const std::size_t top = stack.size() - 1;
        const NodeId id = stack[top].id;
        const int sl = stack[top].slot;
        if (memo(id, sl) >= 0) {
            stack.pop_back();
            continue;
        }
        const auto& edges = graph_->children(id);
        if (edges.empty()) {
            memo(id, sl) = terminal_value(sl) ? 1 : 0;
            stack.pop_back();
            continue;
        }
        const bool mine = focal_mover(sl);
        const int child_slot = next_slot(sl);
        bool pushed = false;
        std::int8_t result = -1;
        while (stack[top].cursor < edges.size()) {
            const NodeId child = edges[stack[top].cursor].child;
            const std::int8_t v = memo(child, child_slot);
            if (v < 0) {
                stack.push_back({child, child_slot, 0});
                pushed = true;
                break;
            }
            if (mine && v == 1) { result = 1; break; }
            if (!mine && v == 0) { result = 0; break; }
            ++stack[top].cursor;
        }
        if (pushed) continue;
        if (result < 0) result = mine ? 0 : 1;
        memo(id, sl) = result;
        stack.pop_back();
    }
}

bool Evaluator::wins(NodeId id, int seat) {
    const int sl = slot(seat);
    if (memo(id, sl) < 0) evaluate(id, sl);
    return memo(id, sl) == 1;
}

Move Evaluator::choice(NodeId id, int seat) {
    const auto& edges = graph_->children(id);
    const bool value = wins(id, seat);
    const int sl = slot(seat);
    const bool mine = focal_mover(sl);
    const int child_seat = (seat + 1) % players_;
    if (mine == value) {
        // Focal mover that wins looks for a winning child; an opponent facing a
        // losing focal team looks for a child where the focal team still loses.
        for (const Edge& e : edges)
            if (wins(e.child, child_seat) == value) return e.move;
    }
    return edges.front().move;
}

// ---- TwoPlayerTable -------------------------------------------------------

TwoPlayerTable::TwoPlayerTable(const StateGraph& graph) : graph_(&graph), win_(graph.size(), 0) {
    for (NodeId id : graph.bottom_up_order()) {
        std::uint8_t w = 0;
        for (const Edge& e : graph.children(id))
            if (!win_[e.child]) { w = 1; break; }
        win_[id] = w;
    }
}

Move TwoPlayerTable::choice(NodeId id) const {
    const auto& edges = graph_->children(id);
    for (const Edge& e : edges)
        if (!win_[e.child]) return e.move;
    return edges.front().move;
}

// ---- solves ---------------------------------------------------------------

namespace {

void check_single_winner(const SolveReport& r) {
    if (r.winners.size() > 1)
        throw std::logic_error("more than one team can force the final move for n=" + std::to_string(r.n));
}

SolveReport base_report(const StateGraph& g, const TurnModel& model) {
    SolveReport r;
    r.params = g.params();
    r.n = g.n();
    r.model = model;
    r.mode = mode_of(model);
    r.states_visited = g.size();
    return r;
}

}  // namespace

SolveReport solve_two_player(GameParams params, std::uint64_t n, const SolveOptions& opts) {
    return solve_two_player(StateGraph::build(params, n), opts);
}

SolveReport solve_two_player(const StateGraph& g, const SolveOptions& opts) {
    SolveReport r = base_report(g, TurnModel::two_player());
    if (!g.terminal(StateGraph::root())) {
        const TwoPlayerTable table(g);
        r.winners = {table.mover_wins(StateGraph::root()) ? 0 : 1};
        if (opts.keep_policy) {
            Policy policy;
            for (NodeId id = 0; id < g.size(); ++id)
                if (!g.terminal(id)) policy.emplace(PolicyKey{canonical_encode(g.state(id)), 0}, table.choice(id));
            r.policy = std::move(policy);
        }
    }
    check_single_winner(r);
    return r;
}

namespace {

// Pairs (node, seat) reachable from (root, seat 0) by following turn order.
Policy focal_policy(const StateGraph& g, const TurnModel& model, Evaluator& ev) {
    const int p = model.players();
    std::vector<std::uint8_t> seen(g.size() * static_cast<std::size_t>(p), 0);
    std::vector<std::pair<NodeId, int>> stack{{StateGraph::root(), 0}};
    seen[0] = 1;
    Policy policy;
    while (!stack.empty()) {
        auto [id, seat] = stack.back();
        stack.pop_back();
        if (g.terminal(id)) continue;
        policy.emplace(PolicyKey{canonical_encode(g.state(id)), ev.slot(seat)}, ev.choice(id, seat));
        const int next = (seat + 1) % p;
        for (const Edge& e : g.children(id)) {
            auto& flag = seen[static_cast<std::size_t>(e.child) * p + next];
            if (!flag) {
                flag = 1;
                stack.push_back({e.child, next});
            }
        }
    }
    return policy;
}

}  // namespace

SolveReport solve_focal(GameParams params, std::uint64_t n, const TurnModel& model, const SolveOptions& opts) {
    return solve_focal(StateGraph::build(params, n), model, opts);
}

SolveReport solve_focal(const StateGraph& g, const TurnModel& model, const SolveOptions& opts) {
    model.validate();
    if (!model.focal) throw ConfigError("solve_focal needs a focal team");
    SolveReport r = base_report(g, model);
    if (g.terminal(StateGraph::root())) return r;
    Evaluator ev(g, model, *model.focal);
    if (ev.wins(StateGraph::root(), 0)) r.winners = {*model.focal};
    if (opts.keep_policy) r.policy = focal_policy(g, model, ev);
    return r;
}

SolveReport winners_all(GameParams params, std::uint64_t n, const TurnModel& model, const SolveOptions& opts) {
    return winners_all(StateGraph::build(params, n), model, opts);
}

SolveReport winners_all(const StateGraph& g, const TurnModel& model, const SolveOptions& opts) {
    model.validate();
    TurnModel open = model;
    open.focal.reset();
    SolveReport r = base_report(g, open);
    if (g.terminal(StateGraph::root())) return r;

    const int teams = open.teams();
    std::vector<std::uint8_t> wins(teams, 0);
    if (opts.threads > 1 && teams > 1) {
        std::vector<std::future<bool>> jobs;
        for (int t = 0; t < teams; ++t)
            jobs.push_back(std::async(std::launch::async, [&g, &open, t] {
                Evaluator ev(g, open, t);
                return ev.wins(StateGraph::root(), 0);
            }));
        for (int t = 0; t < teams; ++t) wins[t] = jobs[t].get() ? 1 : 0;
    } else {
        Evaluator ev(g, open, 0);
        for (int t = 0; t < teams; ++t) {
            ev.set_team(t);
            wins[t] = ev.wins(StateGraph::root(), 0) ? 1 : 0;
        }
    }
    for (int t = 0; t < teams; ++t)
        if (wins[t]) r.winners.push_back(t);
    check_single_winner(r);
    return r;
}

// ---- naive oracle ---------------------------------------------------------

namespace {

bool naive_wins(GameParams params, const GameState& s, int seat, const TurnModel& model, int team) {
    const auto moves = legal_moves(params, s);
    const int p = model.players();
    if (moves.empty()) return model.team_of[(seat + p - 1) % p] == team;
    const bool mine = model.team_of[seat] == team;
    const int next = (seat + 1) % p;
    for (const Move m : moves) {
        const bool v = naive_wins(params, apply_move(params, s, m), next, model, team);
        if (mine && v) return true;
        if (!mine && !v) return false;
    }
    return !mine;
}

}  // namespace

SolveReport solve_naive_oracle(GameParams params, std::uint64_t n, const TurnModel& model) {
    params.validate();
    model.validate();
    const std::uint64_t limit = params.c == 1 ? 18 : 3ull * params.c * params.c + 9;
    if (n > limit)
        throw OracleScaleError("oracle scale exceeded: n=" + std::to_string(n) + " > " + std::to_string(limit));
    SolveReport r;
    r.params = params;
    r.n = n;
    r.model = model;
    r.mode = mode_of(model);
    const GameState start = initial_state(n);
    if (!is_terminal(params, start)) {
        for (int t = 0; t < model.teams(); ++t) {
            if (model.focal && *model.focal != t) continue;
            if (naive_wins(params, start, 0, model, t)) r.winners.push_back(t);
        }
    }
    check_single_winner(r);
    return r;
}

// ---- lines and mistake depth ----------------------------------------------

std::vector<Move> optimal_line(GameParams params, std::uint64_t n) {
    return optimal_line(StateGraph::build(params, n));
}

std::vector<Move> optimal_line(const StateGraph& g) {
    const TwoPlayerTable table(g);
    std::vector<Move> line;
    NodeId id = StateGraph::root();
    while (!g.terminal(id)) {
        const Move m = table.choice(id);
        line.push_back(m);
        for (const Edge& e : g.children(id))
            if (e.move == m) { id = e.child; break; }
    }
    return line;
}

std::vector<Move> forcing_line(const StateGraph& g, const TurnModel& model, int team) {
    Evaluator ev(g, model, team);
    std::vector<Move> line;
    NodeId id = StateGraph::root();
    int seat = 0;
    while (!g.terminal(id)) {
        const Move m = ev.choice(id, seat);
        line.push_back(m);
        for (const Edge& e : g.children(id))
            if (e.move == m) { id = e.child; break; }
        seat = (seat + 1) % model.players();
    }
    return line;
}

MistakeReport mistake_depth(GameParams params, std::uint64_t n) {
    return mistake_depth(StateGraph::build(params, n));
}

MistakeReport mistake_depth(const StateGraph& g) {
    if (g.terminal(StateGraph::root())) throw std::domain_error("game has no winner");
    const TwoPlayerTable table(g);
    MistakeReport report;
    report.winner = table.mover_wins(StateGraph::root()) ? 0 : 1;

    // Frontier of positions reachable on turn t while the winner never errs,
    // each with the first line (in discovery order) that reaches it.
    std::map<NodeId, std::vector<Move>> frontier{{StateGraph::root(), {}}};
    for (std::uint64_t turn = 1; !frontier.empty(); ++turn) {
        const bool winner_moves = static_cast<int>((turn - 1) % 2) == report.winner;
        std::map<NodeId, std::vector<Move>> next;
        for (const auto& [id, line] : frontier) {
            for (const Edge& e : g.children(id)) {
                // A child where the mover-to-be wins is a loss for whoever just moved.
                const bool bad_for_mover = table.mover_wins(e.child);
                if (winner_moves && bad_for_mover) {
                    report.mistake_turn = turn;
                    report.line = line;
                    report.line.push_back(e.move);
                    return report;
                }
                if (!next.contains(e.child)) {
                    auto extended = line;
                    extended.push_back(e.move);
                    next.emplace(e.child, std::move(extended));
                }
            }
        }
        frontier = std::move(next);
    }
    return report;
}

Replay replay(GameParams params, std::uint64_t n, const std::vector<Move>& moves, int players) {
    Replay out{initial_state(n), std::nullopt};
    for (std::size_t t = 0; t < moves.size(); ++t) {
        out.final_state = apply_move(params, out.final_state, moves[t]);
        out.last_seat = static_cast<int>(t % static_cast<std::size_t>(players));
    }
    return out;
}

}  // namespace zeck
