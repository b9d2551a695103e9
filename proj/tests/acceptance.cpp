// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// its time limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zeck/harness.hpp"
#include "zeck/solver.hpp"

using namespace zeck;

namespace {

// Collects mismatches for one criterion.
struct Check {
    std::vector<std::string> problems;
    std::vector<std::string> notes;  // printed under the status line
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::string names(const std::vector<std::string>& v) {
    std::string out = "{";
    for (const auto& s : v) out += (out.size() > 1 ? "," : "") + s;
    return out + "}";
}

std::string inst(GameParams p, std::uint64_t n, const std::string& extra = {}) {
    return "(c,k)=" + p.to_string() + " n=" + std::to_string(n) + (extra.empty() ? "" : " " + extra);
}

void expect_winners(Check& chk, const SolveReport& r, const std::vector<std::string>& want, const std::string& label) {
    const auto got = r.winner_names();
    chk.expect(got == want, label + ": expected " + names(want) + ", got " + names(got));
}

void expect_claim(Check& chk, const std::string& id) {
    const auto r = run_claim(find_claim(id), "quick");
    chk.expect(r.passed() && r.instances_run > 0, "harness claim " + id + " failed:\n" + r.to_text());
}

void c1_fibonacci(Check& chk) {
    for (std::uint64_t n = 3; n <= 40; ++n) expect_winners(chk, solve_two_player({1, 1}, n), {"P2"}, inst({1, 1}, n));
    expect_winners(chk, solve_two_player({1, 1}, 2), {"P1"}, inst({1, 1}, 2));
    expect_winners(chk, solve_two_player({1, 1}, 1), {}, inst({1, 1}, 1));
    expect_claim(chk, "fib-two-player");
}

void c2_tribonacci(Check& chk) {
    for (std::uint64_t n = 10; n <= 30; ++n) expect_winners(chk, solve_two_player({1, 2}, n), {"P2"}, inst({1, 2}, n));
    auto table = [] {
        std::ostringstream out;
        for (std::uint64_t n = 1; n <= 9; ++n) {
            const auto w = solve_two_player({1, 2}, n).winner_names();
            out << "n=" << n << ":" << (w.empty() ? "none" : w.front()) << ' ';
        }
        return out.str();
    };
    const auto first = table();
    chk.expect(first == table(), "small-n table changed between runs");
    chk.notes.push_back("n<=9 winners: " + first);
    expect_claim(chk, "trib-two-player");
}

void c3_trib_multiplayer(Check& chk) {
    for (int p = 3; p <= 5; ++p)
        for (std::uint64_t n = 7; n <= 16; ++n)
            expect_winners(chk, winners_all({1, 2}, n, TurnModel::singletons(p)), {},
                           inst({1, 2}, n, "p=" + std::to_string(p)));
    expect_claim(chk, "trib-multiplayer");
}

void c4_parity(Check& chk) {
    for (unsigned k = 1; k <= 3; ++k)
        for (std::uint64_t n = 10; n <= 20; ++n) expect_winners(chk, solve_two_player({1, k}, n), {"P2"}, inst({1, k}, n));
    for (unsigned k = 1; k <= 2; ++k)
        for (std::uint64_t n = 30; n <= 34; ++n) expect_winners(chk, solve_two_player({2, k}, n), {"P1"}, inst({2, k}, n));
    expect_claim(chk, "parity");
}

void c5_mistake_depth(Check& chk) {
    struct Row { unsigned c, k; std::uint64_t lo, hi; };
    for (const Row row : {Row{1, 2, 10, 16}, Row{1, 3, 10, 14}, Row{2, 2, 30, 32}})
        for (std::uint64_t n = row.lo; n <= row.hi; ++n) {
            const auto r = mistake_depth({row.c, row.k}, n);
            chk.expect(r.mistake_turn == std::optional<std::uint64_t>{row.c + 1},
                       inst({row.c, row.k}, n) + ": mistake turn " +
                           (r.mistake_turn ? std::to_string(*r.mistake_turn) : "none"));
        }
    expect_claim(chk, "mistake-depth");
}

void c6_multiplayer_general(Check& chk) {
    for (std::uint64_t n = 12; n <= 18; ++n)
        expect_winners(chk, winners_all({1, 1}, n, TurnModel::singletons(3)), {}, inst({1, 1}, n, "p=3"));
    expect_claim(chk, "multiplayer-general");
}

void c7_team_no_winner(Check& chk) {
    const auto model = TurnModel::from_seating(block_seating(3, 2));
    for (unsigned k = 1; k <= 2; ++k)
        for (std::uint64_t n = 16; n <= 20; ++n)
            expect_winners(chk, winners_all({1, k}, n, model), {}, inst({1, k}, n, "seating=AABBCC"));

    // Both bound profiles through the harness, and the lemma profile's
    // asserted range lies inside the region the stated bound covers.
    const auto& spec = find_claim("team-no-winner");
    bool saw_stated = false, saw_lemma = false;
    for (const auto& cfg : spec.sweeps("quick")) {
        const auto r = spec.run(cfg);
        chk.expect(r.passed(), cfg.team_bound + " profile failed:\n" + r.to_text());
        for (unsigned c : cfg.c)
            for (unsigned t : cfg.t) {
                const auto stated = team_no_winner_bound(c, t, "stated");
                chk.expect(cfg.n.lo >= team_no_winner_bound(c, t, cfg.team_bound), "sweep starts below its bound");
                chk.expect(cfg.n.lo >= stated, "sweep is outside the stated hypothesis region");
            }
        saw_stated = saw_stated || cfg.team_bound == "stated";
        saw_lemma = saw_lemma || cfg.team_bound == "lemma";
    }
    chk.expect(saw_stated && saw_lemma, "quick profile must run both the stated and the lemma bound");
}

void c8_team_large_wins(Check& chk) {
    for (const char* seating : {"AAAABB", "AABBAA", "AAAAABB"})
        expect_winners(chk, winners_all({1, 1}, 36, TurnModel::from_seating(seating)), {"A"},
                       inst({1, 1}, 36, std::string("seating=") + seating));
    expect_claim(chk, "team-large-wins");
}

// Everything that must not change between runs: winners, size and policy.
std::string report_digest(const SolveReport& r) {
    std::string s;
    for (const auto& w : r.winner_names()) s += w + ",";
    s += "|" + std::to_string(r.states_visited) + "|";
    if (r.policy) s += policy_digest(*r.policy);
    return s;
}

void c9_properties(Check& chk) {
    // Value conservation and strict monovariant decrease.
    for (unsigned c = 1; c <= 2; ++c)
        for (unsigned k = 1; k <= 2; ++k) {
            const GameParams p{c, k};
            for (const auto& s : oracle::all_states(p, 25))
                for (const Move m : legal_moves(p, s)) {
                    const auto child = apply_move(p, s, m);
                    chk.expect(child.value(p) == s.value(p), "value changed: " + canonical_encode(s) + " " + to_string(m));
                    chk.expect(monovariant_rank(child) < monovariant_rank(s),
                               "rank did not drop: " + canonical_encode(s) + " " + to_string(m));
                }
        }
    // Confluence: exhaustive for n <= 25, random playouts up to 60.
    for (unsigned c = 1; c <= 2; ++c)
        for (unsigned k = 1; k <= 2; ++k)
            for (std::uint64_t n = 1; n <= 25; ++n) {
                const GameParams p{c, k};
                std::size_t terminals = 0;
                bool greedy = true;
                for (const auto& s : oracle::reachable(p, n))
                    if (is_terminal(p, s)) {
                        ++terminals;
                        greedy = greedy && s == decompose_greedy(p, n);
                    }
                chk.expect(terminals == 1 && greedy, "confluence fails at " + inst(p, n));
            }
    std::mt19937_64 rng(20240601);
    for (int run = 0; run < 10000; ++run) {
        const GameParams p{1 + static_cast<unsigned>(rng() % 2), 1 + static_cast<unsigned>(rng() % 2)};
        const std::uint64_t n = 1 + rng() % 60;
        auto s = initial_state(n);
        for (auto ms = legal_moves(p, s); !ms.empty(); ms = legal_moves(p, s)) s = apply_move(p, s, ms[rng() % ms.size()]);
        chk.expect(s == decompose_greedy(p, n), "random playout missed the greedy form at " + inst(p, n));
    }
    // Fibonacci move set.
    for (const auto& s : oracle::all_states({1, 1}, 30)) {
        std::set<std::multiset<std::uint64_t>> ours;
        for (const Move m : legal_moves({1, 1}, s)) ours.insert(oracle::values({1, 1}, apply_move({1, 1}, s, m)));
        chk.expect(ours == oracle::fibonacci_children(oracle::values({1, 1}, s)),
                   "Fibonacci move set differs at " + canonical_encode(s));
    }
    // Memoized solvers against the unmemoized oracle; winners_all itself
    // throws if more than one team could force a win.
    for (unsigned c = 1; c <= 2; ++c)
        for (unsigned k = 1; k <= 3; ++k)
            for (int players = 2; players <= 3; ++players)
                for (std::uint64_t n = 1; n <= 12; ++n) {
                    const GameParams p{c, k};
                    const auto model = TurnModel::singletons(players);
                    const auto naive = solve_naive_oracle(p, n, model);
                    std::vector<int> focal;
                    if (n > c)
                        for (int f = 0; f < players; ++f)
                            if (!solve_focal(p, n, model.with_focal(f)).winners.empty()) focal.push_back(f);
                    const auto label = inst(p, n, "p=" + std::to_string(players));
                    chk.expect(focal == naive.winners, "solve_focal disagrees with the oracle at " + label);
                    chk.expect(winners_all(p, n, model).winners == naive.winners, "winners_all disagrees at " + label);
                    chk.expect(naive.winners.size() <= 1, "two forcers at " + label);
                    if (players == 2)
                        chk.expect(solve_two_player(p, n).winners == naive.winners, "two-player solve disagrees at " + label);
                }
    // Determinism across repeated and parallel runs.
    for (const char* seating : {"AABBCC", "AAAABB", "ABC"}) {
        const auto model = TurnModel::from_seating(seating);
        const auto a = report_digest(winners_all({1, 1}, 24, model, {1, true}));
        const auto b = report_digest(winners_all({1, 1}, 24, model, {4, true}));
        const auto c = report_digest(winners_all({1, 1}, 24, model, {1, true}));
        chk.expect(a == b && a == c, std::string("nondeterministic result for ") + seating);
    }
    const auto t1 = run_all("quick", 1);
    const auto t2 = run_all("quick", 2);
    chk.expect(render_json(t1).dump() == render_json(t2).dump(), "harness output depends on the worker count");
}

void c10_refuses_out_of_bounds(Check& chk) {
    auto refused = [&chk](const std::string& what, const std::function<void()>& fn) {
        try {
            fn();
            chk.expect(false, "accepted out-of-bound assert: " + what);
        } catch (const ConfigError&) {
        }
    };
    auto sweep = [](unsigned c, unsigned k, Range n) {
        SweepConfig s;
        s.c = {c};
        s.k = {k};
        s.n = n;
        return s;
    };
    refused("fibonacci n=2", [&] { check_fib_two_player(sweep(1, 1, {2, 5})); });
    refused("tribonacci n=9", [&] { check_trib_two_player(sweep(1, 2, {9, 12})); });
    refused("parity c=1 n=9", [&] { check_two_player_parity(sweep(1, 1, {9, 12})); });
    refused("parity c=2 n=29", [&] { check_two_player_parity(sweep(2, 1, {29, 31})); });
    refused("mistake depth k=1", [&] { check_mistake_depth(sweep(1, 1, {10, 12})); });
    refused("mistake depth c=2 n=29", [&] { check_mistake_depth(sweep(2, 2, {29, 30})); });
    refused("trib multiplayer n=6", [&] { auto s = sweep(1, 2, {6, 8}); s.p = {3}; check_multiplayer_no_winner(s); });
    refused("trib multiplayer p=2", [&] { auto s = sweep(1, 2, {7, 8}); s.p = {2}; check_multiplayer_no_winner(s); });
    refused("general n=11", [&] { auto s = sweep(1, 1, {11, 12}); s.p = {3}; check_multiplayer_no_winner(s); });
    refused("general p=c+1", [&] { auto s = sweep(2, 1, {27, 28}); s.p = {3}; check_multiplayer_no_winner(s); });
    refused("team n=15", [&] { auto s = sweep(1, 1, {15, 16}); s.t = {3}; s.team_bound = "stated"; check_team_no_winner(s); });
    refused("team t=c+1", [&] { auto s = sweep(1, 1, {30, 30}); s.t = {2}; s.team_bound = "stated"; check_team_no_winner(s); });
    refused("team lemma n=35", [&] { auto s = sweep(1, 1, {35, 36}); s.t = {3}; check_team_no_winner(s); });
    refused("large team n=35", [&] { auto s = sweep(1, 1, {35, 36}); s.seatings = {"AAAABB"}; check_team_large_wins(s); });
    refused("large team c=2", [&] { auto s = sweep(2, 1, {36, 36}); s.seatings = {"AAAABB"}; check_team_large_wins(s); });
    refused("large team p=5", [&] { auto s = sweep(1, 1, {36, 36}); s.seatings = {"AAABB"}; check_team_large_wins(s); });
    refused("large team sizes", [&] { auto s = sweep(1, 1, {36, 36}); s.seatings = {"AAABBB"}; check_team_large_wins(s); });
    // Every registered claim stays within its own hypotheses under both profiles.
    for (const auto& spec : claim_registry())
        for (const char* profile : {"quick", "full"}) {
            try {
                for (const auto& cfg : spec.sweeps(profile)) {
                    auto probe = cfg;
                    probe.n = {cfg.n.lo, cfg.n.lo};  // cheapest instance still validates the whole sweep
                    probe.report_n.reset();
                    (void)spec.run(probe);
                }
            } catch (const ConfigError& e) {
                chk.expect(false, spec.id + " " + profile + " profile violates its bounds: " + e.what());
            }
        }
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Fibonacci two-player: P2 for 3..40, P1 at n=2, none at n=1", 30, c1_fibonacci},
        {2, "Tribonacci two-player: P2 for 10..30, stable table for n<=9", 60, c2_tribonacci},
        {3, "Tribonacci multiplayer: no winner for p in 3..5, n in 7..16", 300, c3_trib_multiplayer},
        {4, "two-player parity: c=1 -> P2 (k<=3, 10..20), c=2 -> P1 (k<=2, 30..34)", 300, c4_parity},
        {5, "mistake depth c+1 on (1,2,10..16), (1,3,10..14), (2,2,30..32)", 300, c5_mistake_depth},
        {6, "multiplayer general: no winner for c=k=1, p=3, n in 12..18", 120, c6_multiplayer_general},
        {7, "team no-winner: AABBCC, k in {1,2}, n in 16..20; stated and lemma profiles", 600, c7_team_no_winner},
        {8, "team large-wins: A wins at n=36 for AAAABB, AABBAA, AAAAABB", 900, c8_team_large_wins},
        {9, "property suite: invariants, oracle equivalence, determinism", 600, c9_properties},
        {10, "harness refuses asserts outside the hypothesis bounds", 60, c10_refuses_out_of_bounds},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Check chk;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(chk);
        } catch (const std::exception& e) {
            chk.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds)
            chk.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
        const bool ok = chk.problems.empty();
        failed += ok ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  [" << timing << "]  " << c.title << '\n';
        for (const auto& note : chk.notes) std::cout << "    " << note << '\n';
        for (std::size_t i = 0; i < chk.problems.size() && i < 10; ++i) std::cout << "    " << chk.problems[i] << '\n';
        if (chk.problems.size() > 10) std::cout << "    ... " << chk.problems.size() - 10 << " more\n";
        std::cout.flush();
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
