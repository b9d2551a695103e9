#include "zeck/play.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

namespace zeck {

std::vector<Controller> parse_controllers(std::string_view text) {
    std::vector<Controller> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == 'H' || ch == 'h') out.push_back(Controller::Human);
        else if (ch == 'E' || ch == 'e') out.push_back(Controller::Engine);
        else throw ConfigError("controller must be H or E, got '" + std::string(1, ch) + "' for seat " +
                               std::to_string(i + 1));
    }
    return out;
}

PlaySession::PlaySession(PlayConfig config) : config_(std::move(config)), state_(initial_state(config_.n)) {
    config_.params.validate();
    config_.model.validate();
    if (static_cast<int>(config_.controllers.size()) != config_.model.players())
        throw ConfigError("need one controller per seat (" + std::to_string(config_.model.players()) + ")");
    const bool any_engine = std::ranges::any_of(config_.controllers, [](Controller c) { return c == Controller::Engine; });
    if (any_engine) {
        graph_ = std::make_unique<StateGraph>(StateGraph::build(config_.params, config_.n));
        for (int t = 0; t < config_.model.teams(); ++t)
            evaluators_.push_back(std::make_unique<Evaluator>(*graph_, config_.model, t));
        // Solve up front so the session never stalls mid-game.
        if (!graph_->terminal(StateGraph::root()))
            for (auto& ev : evaluators_) (void)ev->wins(StateGraph::root(), 0);
    }
}

PlaySession::~PlaySession() = default;

int PlaySession::seat_to_move() const {
    return static_cast<int>(transcript_.size() % static_cast<std::size_t>(config_.model.players()));
}

std::optional<int> PlaySession::last_seat() const {
    if (transcript_.empty()) return std::nullopt;
    return static_cast<int>((transcript_.size() - 1) % static_cast<std::size_t>(config_.model.players()));
}

Move PlaySession::engine_move() {
    const NodeId id = *graph_->find(state_);
    const int seat = seat_to_move();
    return evaluators_[config_.model.team_of[seat]]->choice(id, seat);
}

void PlaySession::print_transcript(std::ostream& out) const {
    out << "transcript:";
    for (const Move m : transcript_) out << ' ' << to_string(m);
    out << '\n';
}

int PlaySession::run(std::istream& in, std::ostream& out) {
    const auto& model = config_.model;
    auto seat_label = [&model](int seat) {
        std::string s = "seat " + std::to_string(seat + 1);
        if (!model.singleton_teams()) s += " (team " + model.team_names[model.team_of[seat]] + ")";
        else s += " (" + model.team_names[seat] + ")";
        return s;
    };

    out << "(c,k)=" << config_.params.to_string() << " n=" << config_.n << ", " << model.players() << " seats\n";
    while (true) {
        const auto moves = legal_moves(config_.params, state_);
        if (moves.empty()) break;
        const int seat = seat_to_move();
        out << "turn " << transcript_.size() + 1 << ", " << seat_label(seat) << " to move: "
            << wedge_notation(config_.params, state_, config_.unicode) << '\n';
        Move chosen{};
        if (config_.controllers[seat] == Controller::Engine) {
            chosen = engine_move();
            out << "  engine plays " << describe_move(config_.params, chosen, config_.unicode) << '\n';
        } else {
            for (std::size_t i = 0; i < moves.size(); ++i)
                out << "  " << i + 1 << ") " << describe_move(config_.params, moves[i], config_.unicode) << "  ["
                    << to_string(moves[i]) << "]\n";
            while (true) {
                out << "> " << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\ninput ended; game abandoned\n";
                    print_transcript(out);
                    return 1;
                }
                std::size_t pick = 0;
                auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), pick);
                if (ec == std::errc() && ptr == line.data() + line.size() && pick >= 1 && pick <= moves.size()) {
                    chosen = moves[pick - 1];
                    break;
                }
                out << "  pick a number between 1 and " << moves.size() << '\n';
            }
        }
        state_ = apply_move(config_.params, state_, chosen);
        transcript_.push_back(chosen);
    }

    out << "final state: " << wedge_notation(config_.params, state_, config_.unicode) << "  ["
        << canonical_encode(state_) << "]\n";
    if (const auto last = last_seat()) {
        out << "last move by " << seat_label(*last) << "; winner: " << model.team_names[model.team_of[*last]] << '\n';
    } else {
        out << "no moves were possible; no winner\n";
    }
    print_transcript(out);
    return 0;
}

}  // namespace zeck
