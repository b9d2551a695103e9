#include "zeck/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>

namespace zeck {

using nlohmann::ordered_json;

Range Range::parse(std::string_view text) {
    auto number = [&text](std::string_view part) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ConfigError("bad range '" + std::string(text) + "'");
        return v;
    };
    Range r;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    } else {
        r.lo = r.hi = number(text);
    }
    if (r.lo > r.hi) throw ConfigError("empty range '" + std::string(text) + "'");
    return r;
}

std::string Range::to_string() const {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

ordered_json ClaimResult::to_json() const {
    ordered_json j;
    j["id"] = id;
    j["statement"] = statement;
    j["passed"] = passed();
    j["instances_run"] = instances_run;
    ordered_json fails = ordered_json::array();
    for (const auto& f : failures) {
        std::vector<std::string> moves;
        for (const Move m : f.line) moves.push_back(zeck::to_string(m));
        fails.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}, {"line", moves}});
    }
    j["failures"] = fails;
    ordered_json rep = ordered_json::array();
    for (const auto& o : reported) rep.push_back({{"instance", o.instance}, {"outcome", o.outcome}});
    j["reported"] = rep;
    return j;
}

std::string ClaimResult::to_text() const {
    std::ostringstream out;
    out << (passed() ? "[PASS] " : "[FAIL] ") << id << "  instances=" << instances_run
        << "  failures=" << failures.size() << "  -- " << statement << '\n';
    for (const auto& f : failures) {
        out << "    FAIL " << f.instance << ": expected " << f.expected << ", got " << f.got << "\n      line:";
        for (const Move m : f.line) out << ' ' << zeck::to_string(m);
        out << '\n';
    }
    for (const auto& o : reported) out << "    report " << o.instance << ": " << o.outcome << '\n';
    return out.str();
}

namespace {

std::string winners_text(const SolveReport& r) {
    const auto names = r.winner_names();
    if (names.empty()) return "none";
    std::string out;
    for (const auto& s : names) out += (out.empty() ? "" : ",") + s;
    return out;
}

std::string label(GameParams params, std::uint64_t n, std::string_view extra = {}) {
    std::string s = "(c,k)=" + params.to_string() + " n=" + std::to_string(n);
    if (!extra.empty()) s += " " + std::string(extra);
    return s;
}

std::uint64_t parity_bound(unsigned c) {
    const std::uint64_t a = c + 1ull;
    return a * a * a + a;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Two-player sweep: `expected(c)` gives the winner team id asserted for n in
// cfg.n; cfg.report_n rows are printed only.
ClaimResult two_player_sweep(std::string id, std::string statement, const SweepConfig& cfg,
                             const std::function<int(unsigned c)>& expected) {
    Timer timer;
    ClaimResult res{std::move(id), std::move(statement)};
    for (unsigned c : cfg.c)
        for (unsigned k : cfg.k) {
            const GameParams params{c, k};
            for (std::uint64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
                const auto graph = StateGraph::build(params, n);
                const auto r = solve_two_player(graph, {.keep_policy = false});
                ++res.instances_run;
                const int want = expected(c);
                if (r.winners != std::vector<int>{want})
                    res.failures.push_back({label(params, n), "P" + std::to_string(want + 1), winners_text(r),
                                            optimal_line(graph)});
            }
            if (cfg.report_n)
                for (std::uint64_t n = cfg.report_n->lo; n <= cfg.report_n->hi; ++n)
                    res.reported.push_back({label(params, n), winners_text(solve_two_player(params, n, {.keep_policy = false}))});
        }
    res.seconds = timer.seconds();
    return res;
}

// Asserts that no team can force the final move.
void no_winner_instance(ClaimResult& res, const StateGraph& graph, const TurnModel& model, std::string_view tag,
                        unsigned threads) {
    const auto r = winners_all(graph, model, {.threads = threads, .keep_policy = false});
    ++res.instances_run;
    if (!r.winners.empty())
        res.failures.push_back({label(graph.params(), graph.n(), tag), "none", winners_text(r),
                                forcing_line(graph, model, r.winners.front())});
}

void report_instance(ClaimResult& res, const StateGraph& graph, const TurnModel& model, std::string_view tag,
                     unsigned threads) {
    const auto r = winners_all(graph, model, {.threads = threads, .keep_policy = false});
    res.reported.push_back({label(graph.params(), graph.n(), tag), winners_text(r)});
}

}  // namespace

ClaimResult check_fib_two_player(const SweepConfig& cfg) {
    require(cfg.n.lo >= 3, "fib-two-player asserts only for n >= 3 (got " + cfg.n.to_string() + ")");
    SweepConfig fib = cfg;
    fib.c = {1};
    fib.k = {1};
    return two_player_sweep("fib-two-player", "Fibonacci game, two players: Player 2 wins for every n >= 3", fib,
                            [](unsigned) { return 1; });
}

ClaimResult check_trib_two_player(const SweepConfig& cfg) {
    require(cfg.n.lo >= 10, "trib-two-player asserts only for n >= 10 (got " + cfg.n.to_string() + ")");
    SweepConfig trib = cfg;
    trib.c = {1};
    trib.k = {2};
    if (!trib.report_n) trib.report_n = Range{1, 9};
    return two_player_sweep("trib-two-player", "Tribonacci game, two players: Player 2 wins for every n >= 10", trib,
                            [](unsigned) { return 1; });
}

ClaimResult check_two_player_parity(const SweepConfig& cfg) {
    for (unsigned c : cfg.c)
        require(cfg.n.lo >= parity_bound(c), "parity claim needs n >= (c+1)^3+(c+1) = " +
                                                 std::to_string(parity_bound(c)) + " for c=" + std::to_string(c));
    return two_player_sweep("parity",
                            "two players, n >= (c+1)^3+(c+1): Player 2 wins when c is odd, Player 1 when c is even",
                            cfg, [](unsigned c) { return c % 2 == 1 ? 1 : 0; });
}

ClaimResult check_multiplayer_no_winner(const SweepConfig& cfg) {
    require(!cfg.p.empty(), "multiplayer-no-winner needs at least one seat count");
    for (unsigned c : cfg.c)
        for (unsigned k : cfg.k) {
            const bool trib = c == 1 && k == 2;
            const std::uint64_t bound = trib ? 7 : 3ull * c * c + 6ull * c + 3;
            const int min_p = trib ? 3 : static_cast<int>(c) + 2;
            require(cfg.n.lo >= bound, "multiplayer claim for (c,k)=" + GameParams{c, k}.to_string() + " needs n >= " +
                                           std::to_string(bound));
            for (int p : cfg.p)
                require(p >= min_p, "multiplayer claim for (c,k)=" + GameParams{c, k}.to_string() + " needs p >= " +
                                        std::to_string(min_p));
        }
    Timer timer;
    ClaimResult res{"multiplayer-no-winner",
                    "p >= c+2 players and n >= 3c^2+6c+3 (Tribonacci: p >= 3, n >= 7): no player can force a win"};
    for (unsigned c : cfg.c)
        for (unsigned k : cfg.k)
            for (std::uint64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
                const auto graph = StateGraph::build({c, k}, n);
                for (int p : cfg.p)
                    no_winner_instance(res, graph, TurnModel::singletons(p), "p=" + std::to_string(p), cfg.threads);
            }
    if (cfg.report_n)
        for (unsigned c : cfg.c)
            for (unsigned k : cfg.k)
                for (std::uint64_t n = cfg.report_n->lo; n <= cfg.report_n->hi; ++n) {
                    const auto graph = StateGraph::build({c, k}, n);
                    for (int p : cfg.p)
                        report_instance(res, graph, TurnModel::singletons(p), "p=" + std::to_string(p), cfg.threads);
                }
    res.seconds = timer.seconds();
    return res;
}

ClaimResult check_mistake_depth(const SweepConfig& cfg) {
    for (unsigned k : cfg.k) require(k > 1, "mistake-depth claim needs k > 1 (got k=" + std::to_string(k) + ")");
    for (unsigned c : cfg.c)
        require(cfg.n.lo >= parity_bound(c), "mistake-depth claim needs n >= " + std::to_string(parity_bound(c)) +
                                                 " for c=" + std::to_string(c));
    Timer timer;
    ClaimResult res{"mistake-depth", "k > 1, n >= (c+1)^3+(c+1): the winner can first lose the win on turn c+1"};
    for (unsigned c : cfg.c)
        for (unsigned k : cfg.k)
            for (std::uint64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
                const GameParams params{c, k};
                const auto report = mistake_depth(params, n);
                ++res.instances_run;
                if (report.mistake_turn != std::optional<std::uint64_t>(c + 1))
                    res.failures.push_back({label(params, n), "turn " + std::to_string(c + 1),
                                            report.mistake_turn ? "turn " + std::to_string(*report.mistake_turn) : "none",
                                            report.line});
            }
    if (cfg.report_n)
        for (unsigned c : cfg.c)
            for (unsigned k : cfg.k)
                for (std::uint64_t n = cfg.report_n->lo; n <= cfg.report_n->hi; ++n) {
                    const auto report = mistake_depth({c, k}, n);
                    res.reported.push_back({label({c, k}, n), report.mistake_turn
                                                                  ? "turn " + std::to_string(*report.mistake_turn)
                                                                  : "none"});
                }
    res.seconds = timer.seconds();
    return res;
}

std::string block_seating(unsigned t, unsigned d) {
    if (t > 26) throw ConfigError("at most 26 teams");
    std::string out;
    for (unsigned team = 0; team < t; ++team) out.append(d, static_cast<char>('A' + team));
    return out;
}

std::uint64_t team_no_winner_bound(unsigned c, unsigned t, std::string_view profile) {
    require(t >= c + 2, "team claim needs t >= c+2 (c=" + std::to_string(c) + ", t=" + std::to_string(t) + ")");
    const std::uint64_t d = t - c;
    const std::uint64_t stated = 2 * d * d + 4 * d;
    if (profile == "stated") return stated;
    require(profile == "lemma", "team bound profile must be 'stated' or 'lemma', got '" + std::string(profile) + "'");
    require(t >= 2 * c, "lemma bound profile needs t >= 2c (c=" + std::to_string(c) + ", t=" + std::to_string(t) + ")");
    const std::uint64_t cc = c;
    const std::uint64_t lemma = t >= c + 3 ? 3 * cc * cc + 15 * cc + 12 : 6 * cc * cc + 18 * cc + 12;
    return std::max(stated, lemma);
}

ClaimResult check_team_no_winner(const SweepConfig& cfg) {
    require(!cfg.t.empty(), "team-no-winner needs at least one team count");
    for (unsigned c : cfg.c)
        for (unsigned t : cfg.t) {
            const auto bound = team_no_winner_bound(c, t, cfg.team_bound);
            require(cfg.n.lo >= bound, "team-no-winner (" + cfg.team_bound + " bound) for c=" + std::to_string(c) +
                                           ", t=" + std::to_string(t) + " needs n >= " + std::to_string(bound));
        }
    Timer timer;
    ClaimResult res{"team-no-winner",
                    "t >= c+2 teams of t-c consecutive seats: no team can force a win (" + cfg.team_bound + " bound)"};
    auto sweep = [&](const Range& range, bool assert_rows) {
        for (unsigned c : cfg.c)
            for (unsigned t : cfg.t) {
                const auto model = TurnModel::from_seating(block_seating(t, t - c));
                for (unsigned k : cfg.k)
                    for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
                        const auto graph = StateGraph::build({c, k}, n);
                        const std::string tag = "seating=" + model.seating();
                        if (assert_rows) no_winner_instance(res, graph, model, tag, cfg.threads);
                        else report_instance(res, graph, model, tag, cfg.threads);
                    }
            }
    };
    sweep(cfg.n, true);
    if (cfg.report_n) sweep(*cfg.report_n, false);
    res.seconds = timer.seconds();
    return res;
}

ClaimResult check_team_large_wins(const SweepConfig& cfg) {
    for (unsigned c : cfg.c) require(c == 1, "team-large-wins is stated for c = 1 only");
    require(cfg.n.lo >= 36, "team-large-wins needs n >= 36 (got " + cfg.n.to_string() + ")");
    require(!cfg.seatings.empty(), "team-large-wins needs at least one arrangement");
    std::vector<std::pair<TurnModel, int>> models;
    for (const auto& seating : cfg.seatings) {
        const auto model = TurnModel::from_seating(seating);
        const int p = model.players();
        require(p >= 6, "arrangement " + seating + " needs at least 6 seats");
        require(model.teams() == 2, "arrangement " + seating + " must have exactly two teams");
        int sizes[2] = {0, 0};
        for (int t : model.team_of) ++sizes[t];
        const int large = sizes[0] > sizes[1] ? 0 : 1;
        require(sizes[large] == p - 2 && sizes[1 - large] == 2,
                "arrangement " + seating + " must split seats into " + std::to_string(p - 2) + " and 2");
        models.emplace_back(model, large);
    }
    Timer timer;
    ClaimResult res{"team-large-wins", "c = 1, teams of p-2 and 2 seats, n >= 36: the larger team wins"};
    for (unsigned k : cfg.k)
        for (std::uint64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
            const auto graph = StateGraph::build({1, k}, n);
            for (const auto& [model, large] : models) {
                const auto r = winners_all(graph, model, {.threads = cfg.threads, .keep_policy = false});
                ++res.instances_run;
                if (r.winners != std::vector<int>{large})
                    res.failures.push_back({label(graph.params(), n, "seating=" + model.seating()),
                                            model.team_names[large], winners_text(r),
                                            forcing_line(graph, model, large)});
            }
        }
    res.seconds = timer.seconds();
    return res;
}

// ---- registry -------------------------------------------------------------

namespace {

SweepConfig sweep(std::vector<unsigned> c, std::vector<unsigned> k, Range n) {
    SweepConfig s;
    s.c = std::move(c);
    s.k = std::move(k);
    s.n = n;
    return s;
}

std::vector<ClaimSpec> build_registry() {
    std::vector<ClaimSpec> reg;
    reg.push_back({"fib-two-player", "Fibonacci game, two players: Player 2 wins for every n >= 3",
                   check_fib_two_player, [](std::string_view profile) {
                       auto s = sweep({1}, {1}, profile == "full" ? Range{3, 80} : Range{3, 40});
                       s.report_n = Range{1, 2};
                       return std::vector{s};
                   }});
    reg.push_back({"trib-two-player", "Tribonacci game, two players: Player 2 wins for every n >= 10",
                   check_trib_two_player, [](std::string_view profile) {
                       auto s = sweep({1}, {2}, profile == "full" ? Range{10, 60} : Range{10, 30});
                       s.report_n = Range{1, 9};
                       return std::vector{s};
                   }});
    reg.push_back({"trib-multiplayer", "Tribonacci game, p >= 3 players, n >= 7: no player can force a win",
                   [](const SweepConfig& cfg) {
                       auto r = check_multiplayer_no_winner(cfg);
                       r.id = "trib-multiplayer";
                       return r;
                   },
                   [](std::string_view profile) {
                       auto s = sweep({1}, {2}, profile == "full" ? Range{7, 30} : Range{7, 16});
                       s.p = profile == "full" ? std::vector<int>{3, 4, 5, 6, 7, 8} : std::vector<int>{3, 4, 5};
                       s.report_n = Range{3, 6};
                       return std::vector{s};
                   }});
    reg.push_back({"parity", "two players, n >= (c+1)^3+(c+1): odd c -> Player 2, even c -> Player 1",
                   check_two_player_parity, [](std::string_view profile) {
                       if (profile == "full")
                           return std::vector{sweep({1}, {1, 2, 3, 4, 5}, {10, 40}), sweep({2}, {1, 2, 3, 4}, {30, 60}),
                                              sweep({3}, {1, 2, 3}, {68, 90}), sweep({4}, {1, 2}, {130, 140})};
                       return std::vector{sweep({1}, {1, 2, 3}, {10, 20}), sweep({2}, {1, 2}, {30, 34})};
                   }});
    reg.push_back({"mistake-depth", "k > 1: the winner can first lose the win on turn c+1", check_mistake_depth,
                   [](std::string_view profile) {
                       if (profile == "full")
                           return std::vector{sweep({1}, {2, 3, 4}, {10, 30}), sweep({2}, {2, 3}, {30, 45}),
                                              sweep({3}, {2}, {68, 75})};
                       return std::vector{sweep({1}, {2}, {10, 16}), sweep({1}, {3}, {10, 14}),
                                          sweep({2}, {2}, {30, 32})};
                   }});
    reg.push_back({"multiplayer-general", "p >= c+2 players, n >= 3c^2+6c+3: no player can force a win",
                   [](const SweepConfig& cfg) {
                       auto r = check_multiplayer_no_winner(cfg);
                       r.id = "multiplayer-general";
                       return r;
                   },
                   [](std::string_view profile) {
                       if (profile != "full") {
                           auto s = sweep({1}, {1}, {12, 18});
                           s.p = {3};
                           return std::vector{s};
                       }
                       auto c1 = sweep({1}, {1, 3}, {12, 30});
                       c1.p = {3, 4, 5, 6};
                       auto c2 = sweep({2}, {1, 2, 3}, {27, 40});
                       c2.p = {4, 5, 6};
                       auto c3 = sweep({3}, {1, 2}, {48, 55});
                       c3.p = {5, 6};
                       return std::vector{c1, c2, c3};
                   }});
    reg.push_back({"team-no-winner", "t >= c+2 teams of t-c consecutive seats: no team can force a win",
                   check_team_no_winner, [](std::string_view profile) {
                       auto stated = sweep({1}, {1, 2}, {16, 20});
                       stated.t = {3};
                       stated.team_bound = "stated";
                       auto lemma = sweep({1}, {1, 2}, {36, 37});
                       lemma.t = {3};
                       if (profile != "full") return std::vector{stated, lemma};
                       stated.k = {1, 2, 3};
                       stated.n = {16, 40};
                       auto t4 = sweep({1}, {1, 2}, {30, 40});
                       t4.t = {4};
                       t4.team_bound = "stated";
                       auto t5 = sweep({1}, {1}, {48, 50});
                       t5.t = {5};
                       t5.team_bound = "stated";
                       lemma.n = {36, 45};
                       // For c = 2 the stated bound is too small; assert at the
                       // lemma bound and list the gap.
                       auto c2 = sweep({2}, {1, 2}, {72, 80});
                       c2.t = {4};
                       c2.report_n = Range{16, 71};
                       return std::vector{stated, t4, t5, lemma, c2};
                   }});
    reg.push_back({"team-large-wins", "c = 1, teams of p-2 and 2 seats, n >= 36: the larger team wins",
                   check_team_large_wins, [](std::string_view profile) {
                       auto s = sweep({1}, {1}, {36, 36});
                       s.seatings = {"AAAABB", "AABBAA", "AAAAABB"};
                       if (profile == "full") {
                           s.k = {1, 2, 3};
                           s.n = {36, 45};
                           s.seatings.insert(s.seatings.end(), {"AABAAB", "ABAAAB", "AAABAAB", "AABAAAB", "AAAAAABB",
                                                                "AAAABAAB", "AAAAAAABB"});
                       }
                       return std::vector{s};
                   }});
    return reg;
}

}  // namespace

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> reg = build_registry();
    return reg;
}

const ClaimSpec& find_claim(std::string_view id) {
    for (const auto& spec : claim_registry())
        if (spec.id == id) return spec;
    std::string valid;
    for (const auto& spec : claim_registry()) valid += (valid.empty() ? "" : ", ") + spec.id;
    throw ConfigError("unknown claim '" + std::string(id) + "'; valid ids: " + valid);
}

ClaimResult run_claim(const ClaimSpec& spec, std::string_view profile, unsigned threads) {
    if (profile != "quick" && profile != "full")
        throw ConfigError("unknown profile '" + std::string(profile) + "' (expected quick or full)");
    ClaimResult merged{spec.id, spec.statement};
    for (auto cfg : spec.sweeps(profile)) {
        cfg.threads = threads;
        auto r = spec.run(cfg);
        merged.instances_run += r.instances_run;
        merged.seconds += r.seconds;
        for (auto& f : r.failures) merged.failures.push_back(std::move(f));
        for (auto& o : r.reported) merged.reported.push_back(std::move(o));
    }
    return merged;
}

std::vector<ClaimResult> run_all(std::string_view profile, unsigned threads) {
    std::vector<ClaimResult> out;
    for (const auto& spec : claim_registry()) out.push_back(run_claim(spec, profile, threads));
    return out;
}

std::string render_text(const std::vector<ClaimResult>& results) {
    std::string out;
    std::size_t failed = 0;
    for (const auto& r : results) {
        out += r.to_text();
        if (!r.passed()) ++failed;
    }
    out += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " claims passed\n";
    return out;
}

ordered_json render_json(const std::vector<ClaimResult>& results) {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (const auto& r : results) {
        arr.push_back(r.to_json());
        ok = ok && r.passed();
    }
    j["passed"] = ok;
    j["claims"] = arr;
    return j;
}

}  // namespace zeck
