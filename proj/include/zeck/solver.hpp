#pragma once

// Last-move-wins solving over the acyclic state graph.
//
// Two-player mode is ordinary normal play. In multiplayer and team modes a
// team "has a winning strategy" when it can force the final move against
// every combination of moves by all other seats (maximin: the rest of the
// table is treated as one adversarial coalition).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeck/engine.hpp"
#include "zeck/graph.hpp"

namespace zeck {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Seats are 0-based internally and printed 1-based. Turn t (1-based) is
// played by seat (t-1) mod p.
struct TurnModel {
    std::vector<int> team_of;             // seat -> team id
    std::vector<std::string> team_names;  // team id -> label
    std::optional<int> focal;             // team whose forced win is asked about

    static TurnModel two_player();
    static TurnModel singletons(int players);
    // One letter per seat, e.g. "AAAABB". Team ids follow sorted letter order.
    static TurnModel from_seating(std::string_view seating);

    int players() const { return static_cast<int>(team_of.size()); }
    int teams() const { return static_cast<int>(team_names.size()); }
    bool singleton_teams() const;
    // Seating letters for team models, empty for singleton models.
    std::string seating() const;
    int seat_for_turn(std::uint64_t turn) const;  // 0-based seat

    TurnModel with_focal(int team) const;
    // Throws ConfigError on an empty table, seats mapped outside the team
    // list, teams without seats, or a focal team out of range.
    void validate() const;
};

using PolicyKey = std::pair<std::string, int>;  // (canonical state, seat slot)
using Policy = std::map<PolicyKey, Move>;

// FNV-1a over "state|slot|move" lines in key order, rendered as 16 hex digits.
std::string policy_digest(const Policy& policy);

enum class SolveMode { TwoPlayer, Multiplayer, Team };
std::string to_string(SolveMode mode);
SolveMode mode_of(const TurnModel& model);

struct SolveReport {
    GameParams params;
    std::uint64_t n = 0;
    TurnModel model;
    SolveMode mode = SolveMode::TwoPlayer;
    std::vector<int> winners;  // team ids, ascending
    std::size_t states_visited = 0;
    std::optional<Policy> policy;

    std::vector<std::string> winner_names() const;
};

struct SolveOptions {
    unsigned threads = 1;  // > 1 solves independent teams concurrently
    bool keep_policy = true;
};

// Answers "can team T force the final move from this node with this seat to
// move?" with memoization. With singleton teams the memo is keyed by the
// seat offset (focal seat - mover seat) mod p and is shared by every focal
// seat; otherwise it is keyed by the mover seat and is specific to one team.
class Evaluator {
public:
    Evaluator(const StateGraph& graph, const TurnModel& model, int team);

    void set_team(int team);
    int team() const { return team_; }

    // A terminal node counts as a win when the previous seat's team is the
    // focal team, so callers must not ask about a terminal root.
    bool wins(NodeId id, int seat);
    // Winning move for the focal team when it is to move and wins; the first
    // refutation when an opponent is to move and the focal team loses;
    // otherwise the first legal move. Undefined on terminal nodes.
    Move choice(NodeId id, int seat);

    int slot(int seat) const;
    std::size_t memo_entries() const;

private:
    bool focal_mover(int slot) const;
    int next_slot(int slot) const;
    bool terminal_value(int slot) const;
    void evaluate(NodeId id, int slot);
    std::int8_t& memo(NodeId id, int slot) { return memo_[static_cast<std::size_t>(id) * players_ + slot]; }

    const StateGraph* graph_;
    const TurnModel* model_;
    int team_;
    int players_;
    bool offset_mode_;
    std::vector<std::int8_t> memo_;  // -1 unknown, 0 false, 1 true
};

// Win-for-the-player-to-move over every node, evaluated bottom-up.
class TwoPlayerTable {
public:
    explicit TwoPlayerTable(const StateGraph& graph);
    bool mover_wins(NodeId id) const { return win_[id] != 0; }
    // First child that is a loss for the opponent, else the first move.
    Move choice(NodeId id) const;

private:
    const StateGraph* graph_;
    std::vector<std::uint8_t> win_;
};

SolveReport solve_two_player(GameParams params, std::uint64_t n, const SolveOptions& opts = {});
SolveReport solve_two_player(const StateGraph& graph, const SolveOptions& opts = {});

// model.focal must be set.
SolveReport solve_focal(GameParams params, std::uint64_t n, const TurnModel& model, const SolveOptions& opts = {});
SolveReport solve_focal(const StateGraph& graph, const TurnModel& model, const SolveOptions& opts = {});

// Every team that can force the final move; never more than one.
SolveReport winners_all(GameParams params, std::uint64_t n, const TurnModel& model, const SolveOptions& opts = {});
SolveReport winners_all(const StateGraph& graph, const TurnModel& model, const SolveOptions& opts = {});

class OracleScaleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unmemoized full-tree recursion straight on the engine, for cross-checking.
// Refuses n > 18 when c = 1 and n > 3c^2 + 9 otherwise.
SolveReport solve_naive_oracle(GameParams params, std::uint64_t n, const TurnModel& model);

struct MistakeReport {
    int winner = 0;                          // 0 = Player 1, 1 = Player 2
    std::optional<std::uint64_t> mistake_turn;
    std::vector<Move> line;                  // correct play up to and including the mistake
};

// Earliest winner turn on which a position reachable under correct play by
// the winner offers a move that hands the win to the opponent.
MistakeReport mistake_depth(GameParams params, std::uint64_t n);
MistakeReport mistake_depth(const StateGraph& graph);

// Winner plays its first winning move, loser plays its first listed move.
std::vector<Move> optimal_line(GameParams params, std::uint64_t n);
std::vector<Move> optimal_line(const StateGraph& graph);

// Play where `team` follows its winning choices and everyone else follows
// their first refutation of it (see Evaluator::choice).
std::vector<Move> forcing_line(const StateGraph& graph, const TurnModel& model, int team);

// Replays a move list from initial_state(n). Returns the final state and the
// 0-based seat that made the last move (nullopt when the list is empty).
struct Replay {
    GameState final_state;
    std::optional<int> last_seat;
};
Replay replay(GameParams params, std::uint64_t n, const std::vector<Move>& moves, int players);

}  // namespace zeck
