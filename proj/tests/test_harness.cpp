#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zeck/harness.hpp"

using namespace zeck;

namespace {

SweepConfig sweep(unsigned c, unsigned k, Range n) {
    SweepConfig s;
    s.c = {c};
    s.k = {k};
    s.n = n;
    return s;
}

}  // namespace

TEST_CASE("Range parsing") {
    CHECK(Range::parse("10..14").lo == 10);
    CHECK(Range::parse("10..14").hi == 14);
    CHECK(Range::parse("12").lo == 12);
    CHECK(Range::parse("12").hi == 12);
    CHECK(Range::parse("3..7").to_string() == "3..7");
    CHECK(Range::parse("3..7").contains(7));
    CHECK_FALSE(Range::parse("3..7").contains(8));
    for (const char* bad : {"", "..", "3..", "..4", "a..b", "5..3", "1.2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Range::parse(bad), ConfigError);
    }
}

TEST_CASE("asserted ranges must satisfy the hypotheses") {
    CHECK_THROWS_AS(check_fib_two_player(sweep(1, 1, {2, 10})), ConfigError);
    CHECK_THROWS_AS(check_trib_two_player(sweep(1, 2, {9, 12})), ConfigError);
    CHECK_THROWS_AS(check_two_player_parity(sweep(1, 1, {9, 12})), ConfigError);
    CHECK_THROWS_AS(check_two_player_parity(sweep(2, 1, {29, 30})), ConfigError);
    CHECK_THROWS_AS(check_mistake_depth(sweep(1, 1, {10, 12})), ConfigError);  // k = 1
    CHECK_THROWS_AS(check_mistake_depth(sweep(1, 2, {9, 12})), ConfigError);

    auto trib = sweep(1, 2, {6, 10});
    trib.p = {3};
    CHECK_THROWS_AS(check_multiplayer_no_winner(trib), ConfigError);
    trib.n = {7, 10};
    trib.p = {2};
    CHECK_THROWS_AS(check_multiplayer_no_winner(trib), ConfigError);

    auto general = sweep(2, 1, {26, 28});
    general.p = {4};
    CHECK_THROWS_AS(check_multiplayer_no_winner(general), ConfigError);  // 3c^2+6c+3 = 27
    general.n = {27, 28};
    general.p = {3};
    CHECK_THROWS_AS(check_multiplayer_no_winner(general), ConfigError);  // p >= c+2

    auto teams = sweep(1, 1, {15, 16});
    teams.t = {3};
    teams.team_bound = "stated";
    CHECK_THROWS_AS(check_team_no_winner(teams), ConfigError);
    teams.n = {16, 16};
    teams.t = {2};
    CHECK_THROWS_AS(check_team_no_winner(teams), ConfigError);  // t >= c+2
    teams.t = {3};
    teams.team_bound = "lemma";
    CHECK_THROWS_AS(check_team_no_winner(teams), ConfigError);  // lemma bound is 36
    teams.team_bound = "other";
    CHECK_THROWS_AS(check_team_no_winner(teams), ConfigError);

    auto large = sweep(1, 1, {35, 36});
    large.seatings = {"AAAABB"};
    CHECK_THROWS_AS(check_team_large_wins(large), ConfigError);
    large.n = {36, 36};
    large.seatings = {"AAABBB"};
    CHECK_THROWS_AS(check_team_large_wins(large), ConfigError);
    large.seatings = {"AAABB"};
    CHECK_THROWS_AS(check_team_large_wins(large), ConfigError);  // p >= 6
    large.seatings = {"AAAABB"};
    large.c = {2};
    CHECK_THROWS_AS(check_team_large_wins(large), ConfigError);
}

TEST_CASE("instances below a bound may be reported but not asserted") {
    auto cfg = sweep(1, 2, {10, 12});
    cfg.report_n = Range{1, 9};
    const auto r = check_trib_two_player(cfg);
    CHECK(r.passed());
    CHECK(r.instances_run == 3);
    REQUIRE(r.reported.size() == 9);
    CHECK(r.reported[0].outcome == "none");
    CHECK(r.reported[1].outcome == "P1");
    CHECK(r.reported[3].outcome == "P2");
}

TEST_CASE("team bounds") {
    CHECK(team_no_winner_bound(1, 3, "stated") == 16);
    CHECK(team_no_winner_bound(1, 4, "stated") == 30);
    CHECK(team_no_winner_bound(1, 3, "lemma") == 36);
    CHECK(team_no_winner_bound(2, 4, "lemma") == 72);
    CHECK_THROWS_AS(team_no_winner_bound(1, 2, "stated"), ConfigError);
    CHECK_THROWS_AS(team_no_winner_bound(1, 3, "nope"), ConfigError);
    CHECK(block_seating(3, 2) == "AABBCC");
    CHECK(block_seating(4, 1) == "ABCD");
}

TEST_CASE("claims pass on small sweeps") {
    CHECK(check_fib_two_player(sweep(1, 1, {3, 20})).passed());
    CHECK(check_two_player_parity(sweep(2, 1, {30, 31})).passed());
    CHECK(check_mistake_depth(sweep(1, 2, {10, 12})).passed());
    auto teams = sweep(1, 1, {16, 17});
    teams.t = {3};
    teams.team_bound = "stated";
    CHECK(check_team_no_winner(teams).passed());
}

TEST_CASE("failures carry a replayable counterexample") {
    // The stated team bound is too small for c = 2, t = 4: team D forces the
    // last move at n = 19.
    auto cfg = sweep(2, 1, {19, 19});
    cfg.t = {4};
    cfg.team_bound = "stated";
    const auto r = check_team_no_winner(cfg);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.failures.size() == 1);
    const auto& f = r.failures.front();
    CHECK(f.expected == "none");
    CHECK(f.got == "D");
    const auto model = TurnModel::from_seating(block_seating(4, 2));
    const auto rp = replay({2, 1}, 19, f.line, model.players());
    CHECK(is_terminal({2, 1}, rp.final_state));
    REQUIRE(rp.last_seat);
    CHECK(model.team_names[model.team_of[*rp.last_seat]] == f.got);
    CHECK(r.to_text().find("[FAIL]") != std::string::npos);
    CHECK(r.to_json()["failures"][0]["line"].size() == f.line.size());
}

TEST_CASE("registry and profiles") {
    std::vector<std::string> ids;
    for (const auto& spec : claim_registry()) ids.push_back(spec.id);
    CHECK(ids == std::vector<std::string>{"fib-two-player", "trib-two-player", "trib-multiplayer", "parity",
                                          "mistake-depth", "multiplayer-general", "team-no-winner",
                                          "team-large-wins"});
    CHECK(find_claim("parity").id == "parity");
    try {
        find_claim("nonsense");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("team-large-wins") != std::string::npos);
    }
    CHECK_THROWS_AS(run_claim(find_claim("parity"), "slow"), ConfigError);

    // Full sweeps contain the quick ones.
    for (const auto& spec : claim_registry()) {
        CAPTURE(spec.id);
        const auto quick = spec.sweeps("quick");
        const auto full = spec.sweeps("full");
        for (const auto& q : quick) {
            bool covered = false;
            for (const auto& f : full) {
                auto has = [](const auto& big, const auto& small) {
                    for (const auto& x : small)
                        if (std::find(big.begin(), big.end(), x) == big.end()) return false;
                    return true;
                };
                if (f.team_bound == q.team_bound && f.n.lo <= q.n.lo && q.n.hi <= f.n.hi && has(f.c, q.c) &&
                    has(f.k, q.k) && has(f.p, q.p) && has(f.t, q.t) && has(f.seatings, q.seatings))
                    covered = true;
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("reports are deterministic") {
    const auto a = run_claim(find_claim("trib-two-player"), "quick");
    const auto b = run_claim(find_claim("trib-two-player"), "quick");
    REQUIRE(a.reported.size() == b.reported.size());
    for (std::size_t i = 0; i < a.reported.size(); ++i) {
        CHECK(a.reported[i].instance == b.reported[i].instance);
        CHECK(a.reported[i].outcome == b.reported[i].outcome);
    }
    const std::vector<std::string> table{"none", "P1", "P1", "P2", "P2", "P1", "P2", "P2", "P2"};
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(a.reported[i].outcome == table[i]);

    const auto text = render_text({a});
    CHECK(text.find("[PASS] trib-two-player") != std::string::npos);
    CHECK(text.find("1/1 claims passed") != std::string::npos);
    CHECK(render_json({a}).dump() == render_json({b}).dump());
}
