#pragma once

// Finite sweeps that check the known winner results for the game family.
//
// Each claim carries the hypothesis bounds of the result it checks. Asserted
// ranges are validated against those bounds before anything is solved and a
// violation is a ConfigError; instances below a bound can only be run as
// "reported" rows, which are printed but never asserted.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zeck/solver.hpp"

namespace zeck {

struct Range {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;

    // "10..14" or "12"
    static Range parse(std::string_view text);
    std::string to_string() const;
    bool contains(std::uint64_t v) const { return lo <= v && v <= hi; }
};

struct Failure {
    std::string instance;
    std::string expected;
    std::string got;
    std::vector<Move> line;  // replayable from initial_state(n)
};

struct Observation {
    std::string instance;
    std::string outcome;
};

struct ClaimResult {
    ClaimResult() = default;
    ClaimResult(std::string id_, std::string statement_) : id(std::move(id_)), statement(std::move(statement_)) {}

    std::string id;
    std::string statement;
    std::size_t instances_run = 0;
    std::vector<Failure> failures;
    std::vector<Observation> reported;
    double seconds = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// Ranges for one sweep. Which fields matter depends on the claim.
struct SweepConfig {
    std::vector<unsigned> c{1};
    std::vector<unsigned> k{1};
    Range n{1, 1};
    std::optional<Range> report_n;      // informational instances
    std::vector<int> p;                  // seat counts
    std::vector<unsigned> t;             // team counts
    std::vector<std::string> seatings;   // explicit arrangements
    std::string team_bound = "lemma";    // "stated" or "lemma" for team-no-winner
    unsigned threads = 1;
};

// Two-player Fibonacci game: second player wins for every n >= 3.
ClaimResult check_fib_two_player(const SweepConfig& cfg);
// Two-player Tribonacci: second player wins for n >= 10; n <= 9 is reported.
ClaimResult check_trib_two_player(const SweepConfig& cfg);
// For n >= (c+1)^3 + (c+1): odd c -> Player 2, even c -> Player 1.
ClaimResult check_two_player_parity(const SweepConfig& cfg);
// No single player can force the last move: Tribonacci with p >= 3 and
// n >= 7, otherwise p >= c+2 and n >= 3c^2 + 6c + 3.
ClaimResult check_multiplayer_no_winner(const SweepConfig& cfg);
// k > 1 and n >= (c+1)^3 + (c+1): the winner can first blunder on turn c+1.
ClaimResult check_mistake_depth(const SweepConfig& cfg);
// t >= c+2 teams of d = t-c consecutive seats: no team wins.
ClaimResult check_team_no_winner(const SweepConfig& cfg);
// c = 1, p >= 6, teams of p-2 and 2 seats, n >= 36: the larger team wins.
ClaimResult check_team_large_wins(const SweepConfig& cfg);

// Lower n bound the team-no-winner claim asserts at for (c, t) under the
// given bound profile. Throws ConfigError when the profile's hypotheses fail.
std::uint64_t team_no_winner_bound(unsigned c, unsigned t, std::string_view profile);
// Consecutive blocks of d = t - c seats per team: "AABBCC" for c=1, t=3.
std::string block_seating(unsigned t, unsigned d);

struct ClaimSpec {
    std::string id;
    std::string statement;
    std::function<ClaimResult(const SweepConfig&)> run;
    std::function<std::vector<SweepConfig>(std::string_view profile)> sweeps;
};

const std::vector<ClaimSpec>& claim_registry();
const ClaimSpec& find_claim(std::string_view id);  // throws ConfigError listing valid ids

// Runs every sweep of one claim under a profile and merges the results.
ClaimResult run_claim(const ClaimSpec& spec, std::string_view profile, unsigned threads = 1);
// profile is "quick" or "full".
std::vector<ClaimResult> run_all(std::string_view profile, unsigned threads = 1);

std::string render_text(const std::vector<ClaimResult>& results);
nlohmann::ordered_json render_json(const std::vector<ClaimResult>& results);

}  // namespace zeck
