#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zeck/engine.hpp"
#include "zeck/solver.hpp"

namespace zeck {

enum class Controller { Human, Engine };

// "HE" -> {Human, Engine}; one letter per seat, case-insensitive.
std::vector<Controller> parse_controllers(std::string_view text);

struct PlayConfig {
    GameParams params;
    std::uint64_t n = 1;
    TurnModel model = TurnModel::two_player();
    std::vector<Controller> controllers;  // one per seat
    bool unicode = false;
};

// Numbered-move terminal session. Engine seats follow the solved policy of
// their own team; humans pick from the numbered legal moves.
class PlaySession {
public:
    explicit PlaySession(PlayConfig config);
    ~PlaySession();
    PlaySession(const PlaySession&) = delete;
    PlaySession& operator=(const PlaySession&) = delete;

    // Returns 0 when the game ran to its end, 1 when input ran out first.
    int run(std::istream& in, std::ostream& out);

    const GameState& state() const { return state_; }
    std::uint64_t moves_made() const { return transcript_.size(); }
    const std::vector<Move>& transcript() const { return transcript_; }
    int seat_to_move() const;
    std::optional<int> last_seat() const;

private:
    Move engine_move();
    void print_transcript(std::ostream& out) const;

    PlayConfig config_;
    GameState state_;
    std::vector<Move> transcript_;
    std::unique_ptr<StateGraph> graph_;
    std::vector<std::unique_ptr<Evaluator>> evaluators_;  // per team
};

}  // namespace zeck
