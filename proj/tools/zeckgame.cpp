// zeckgame: solve, verify, export and play the (c,k)-nacci Zeckendorf game.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zeck/dot.hpp"
#include "zeck/engine.hpp"
#include "zeck/harness.hpp"
#include "zeck/play.hpp"
#include "zeck/report.hpp"
#include "zeck/sequence.hpp"
#include "zeck/solver.hpp"

namespace {

using namespace zeck;

constexpr const char* kCacheEnv = "ZECK_CACHE";

struct ParamFlags {
    unsigned c = 1;
    unsigned k = 1;

    void add(CLI::App* cmd) {
        cmd->add_option("--c", c, "recurrence constant c >= 1")->check(CLI::PositiveNumber);
        cmd->add_option("--k", k, "recurrence depth k >= 1")->check(CLI::PositiveNumber);
    }
    GameParams params() const { return {c, k}; }
};

struct TableFlags {
    int players = 0;
    std::string teams;

    void add(CLI::App* cmd) {
        cmd->add_option("--players", players, "number of seats (omit for two players)")->check(CLI::PositiveNumber);
        cmd->add_option("--teams", teams, "seating, one letter per seat, e.g. AAAABB");
    }
    TurnModel model() const {
        if (!teams.empty()) {
            auto m = TurnModel::from_seating(teams);
            if (players != 0 && players != m.players())
                throw ConfigError("--players " + std::to_string(players) + " does not match seating '" + teams + "'");
            return m;
        }
        return players == 0 ? TurnModel::two_player() : TurnModel::singletons(players);
    }
};

int team_by_name(const TurnModel& model, const std::string& name) {
    for (int t = 0; t < model.teams(); ++t)
        if (model.team_names[t] == name) return t;
    throw ConfigError("no team named '" + name + "'");
}

std::string cache_path_or_env(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kCacheEnv)) return env;
    return {};
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Range r = Range::parse(item);
        for (auto v = r.lo; v <= r.hi; ++v) out.push_back(static_cast<T>(v));
    }
    if (out.empty()) throw ConfigError("empty list '" + text + "'");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(c,k)-nacci Zeckendorf game solver"};
    app.require_subcommand(1);

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "print (c,k)-nacci terms up to a bound");
    ParamFlags seq_params;
    seq_params.add(seq_cmd);
    std::uint64_t bound = 100;
    seq_cmd->add_option("--bound", bound, "largest value of interest")->check(CLI::PositiveNumber);

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "greedy generalized Zeckendorf decomposition");
    ParamFlags dec_params;
    dec_params.add(dec_cmd);
    std::uint64_t dec_n = 1;
    dec_cmd->add_option("--n", dec_n, "value")->required()->check(CLI::PositiveNumber);

    // moves
    auto* moves_cmd = app.add_subcommand("moves", "list legal moves from a state");
    ParamFlags moves_params;
    moves_params.add(moves_cmd);
    std::string moves_state;
    bool moves_unicode = false;
    moves_cmd->add_option("--state", moves_state, "canonical state, e.g. 1^2,2^1")->required();
    moves_cmd->add_flag("--unicode", moves_unicode, "use the wedge and arrow glyphs");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide who can force the final move");
    ParamFlags solve_params;
    solve_params.add(solve_cmd);
    TableFlags solve_table;
    solve_table.add(solve_cmd);
    std::uint64_t solve_n = 1;
    std::string focal_name, solve_cache;
    unsigned solve_threads = 1;
    solve_cmd->add_option("--n", solve_n, "game value")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--focal", focal_name, "only ask about this team (P1, P2, ... or a seating letter)");
    solve_cmd->add_option("--cache", solve_cache, std::string("solve cache file (default $") + kCacheEnv + ")");
    solve_cmd->add_option("--threads", solve_threads, "worker threads for team sweeps")->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a claim sweep (or 'all')");
    std::string claim_id, profile = "quick", v_c, v_k, v_n, v_report, v_p, v_t, v_seating, v_bound, v_json;
    unsigned v_threads = 1;
    verify_cmd->add_option("claim", claim_id, "claim id or 'all'")->required();
    verify_cmd->add_option("--profile", profile, "quick or full");
    verify_cmd->add_option("--c", v_c, "c values, e.g. 1,2");
    verify_cmd->add_option("--k", v_k, "k values, e.g. 1..3");
    verify_cmd->add_option("--n", v_n, "asserted n range, e.g. 10..14");
    verify_cmd->add_option("--report-n", v_report, "reported-only n range");
    verify_cmd->add_option("--p", v_p, "seat counts, e.g. 3,4,5");
    verify_cmd->add_option("--t", v_t, "team counts");
    verify_cmd->add_option("--seating", v_seating, "arrangements, comma separated");
    verify_cmd->add_option("--team-bound", v_bound, "stated or lemma");
    verify_cmd->add_option("--json", v_json, "also write the JSON report here");
    verify_cmd->add_option("--threads", v_threads, "worker threads")->check(CLI::PositiveNumber);

    // play
    auto* play_cmd = app.add_subcommand("play", "play in the terminal against the solved policy");
    ParamFlags play_params;
    play_params.add(play_cmd);
    TableFlags play_table;
    play_table.add(play_cmd);
    std::uint64_t play_n = 1;
    std::string controllers;
    bool play_unicode = false;
    play_cmd->add_option("--n", play_n, "game value")->required()->check(CLI::PositiveNumber);
    play_cmd->add_option("--controllers", controllers, "one of H/E per seat (default: human first, engines after)");
    play_cmd->add_flag("--unicode", play_unicode, "use the wedge and arrow glyphs");

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "write the two-player game tree as Graphviz DOT");
    ParamFlags dot_params;
    dot_params.add(dot_cmd);
    std::uint64_t dot_n = 1;
    unsigned depth = 0;
    std::string dot_out;
    bool dot_unicode = false;
    dot_cmd->add_option("--n", dot_n, "game value")->required()->check(CLI::PositiveNumber);
    dot_cmd->add_option("--depth", depth, "layers below the root (0 = all)");
    dot_cmd->add_option("--out", dot_out, "output path (default stdout)");
    dot_cmd->add_flag("--unicode", dot_unicode, "use the wedge glyph in labels");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the solve cache");
    cache_cmd->require_subcommand(1);
    std::string cache_flag;
    cache_cmd->add_option("--cache", cache_flag, std::string("cache file (default $") + kCacheEnv + ")");
    auto* stats_cmd = cache_cmd->add_subcommand("stats", "count cached solves");
    auto* clear_cmd = cache_cmd->add_subcommand("clear", "delete the cache file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*seq_cmd) {
            const auto seq = generate_terms(seq_params.params(), bound);
            for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq.terms()[i];
            std::cout << '\n';
            return 0;
        }
        if (*dec_cmd) {
            const auto s = decompose_greedy(dec_params.params(), dec_n);
            std::cout << canonical_encode(s) << "  " << wedge_notation(dec_params.params(), s) << '\n';
            return 0;
        }
        if (*moves_cmd) {
            const auto p = moves_params.params();
            const auto s = canonical_decode(moves_state);
            const auto moves = legal_moves(p, s);
            if (moves.empty()) std::cout << "terminal\n";
            for (std::size_t i = 0; i < moves.size(); ++i)
                std::cout << i + 1 << ") " << to_string(moves[i]) << "  " << describe_move(p, moves[i], moves_unicode)
                          << "  -> " << canonical_encode(apply_move(p, s, moves[i])) << '\n';
            return 0;
        }
        if (*solve_cmd) {
            auto model = solve_table.model();
            if (!focal_name.empty()) model.focal = team_by_name(model, focal_name);
            const auto params = solve_params.params();
            params.validate();

            CacheRecord query;
            query.params = params;
            query.n = solve_n;
            query.mode = to_string(mode_of(model));
            query.players = model.players();
            query.seating = model.seating();
            if (model.focal) query.focal = model.team_names[*model.focal];

            const std::string path = cache_path_or_env(solve_cache);
            if (!path.empty()) {
                if (auto hit = SolveCache(path).lookup(query)) {
                    std::cout << report_json(*hit, true).dump(2) << '\n';
                    return 0;
                }
            }
            const SolveOptions opts{.threads = solve_threads};
            SolveReport report;
            if (model.focal) report = solve_focal(params, solve_n, model, opts);
            else if (mode_of(model) == SolveMode::TwoPlayer) report = solve_two_player(params, solve_n, opts);
            else report = winners_all(params, solve_n, model, opts);
            const auto rec = make_record(report, utc_timestamp());
            if (!path.empty()) SolveCache(path).append(rec);
            std::cout << report_json(rec, false).dump(2) << '\n';
            return 0;
        }
        if (*verify_cmd) {
            std::vector<ClaimResult> results;
            const bool custom = !(v_c.empty() && v_k.empty() && v_n.empty() && v_report.empty() && v_p.empty() &&
                                  v_t.empty() && v_seating.empty() && v_bound.empty());
            if (claim_id == "all") {
                if (custom) throw ConfigError("range flags need a single claim id");
                results = run_all(profile, v_threads);
            } else {
                const auto& spec = find_claim(claim_id);
                if (!custom) {
                    results.push_back(run_claim(spec, profile, v_threads));
                } else {
                    auto cfg = spec.sweeps(profile).front();
                    if (!v_c.empty()) cfg.c = parse_list<unsigned>(v_c);
                    if (!v_k.empty()) cfg.k = parse_list<unsigned>(v_k);
                    if (!v_n.empty()) cfg.n = Range::parse(v_n);
                    cfg.report_n.reset();
                    if (!v_report.empty()) cfg.report_n = Range::parse(v_report);
                    if (!v_p.empty()) cfg.p = parse_list<int>(v_p);
                    if (!v_t.empty()) cfg.t = parse_list<unsigned>(v_t);
                    if (!v_bound.empty()) cfg.team_bound = v_bound;
                    if (!v_seating.empty()) {
                        cfg.seatings.clear();
                        std::stringstream ss(v_seating);
                        for (std::string s; std::getline(ss, s, ',');) cfg.seatings.push_back(s);
                    }
                    cfg.threads = v_threads;
                    results.push_back(spec.run(cfg));
                }
            }
            std::cout << render_text(results);
            if (!v_json.empty()) {
                std::ofstream out(v_json);
                if (!out) throw std::runtime_error("cannot write " + v_json);
                out << render_json(results).dump(2) << '\n';
            }
            for (const auto& r : results)
                if (!r.passed()) return 1;
            return 0;
        }
        if (*play_cmd) {
            PlayConfig cfg;
            cfg.params = play_params.params();
            cfg.n = play_n;
            cfg.model = play_table.model();
            cfg.unicode = play_unicode;
            if (controllers.empty()) {
                controllers = "H" + std::string(static_cast<std::size_t>(cfg.model.players() - 1), 'E');
            }
            cfg.controllers = parse_controllers(controllers);
            PlaySession session(std::move(cfg));
            return session.run(std::cin, std::cout);
        }
        if (*dot_cmd) {
            const auto graph = StateGraph::build(dot_params.params(), dot_n);
            DotOptions opt;
            if (depth > 0) opt.depth_cap = depth;
            opt.unicode = dot_unicode;
            const std::string text = export_dot(graph, opt);
            if (dot_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(dot_out);
                if (!out) throw std::runtime_error("cannot write " + dot_out);
                out << text;
            }
            return 0;
        }
        if (*cache_cmd) {
            const std::string path = cache_path_or_env(cache_flag);
            if (path.empty()) throw ConfigError(std::string("no cache path: pass --cache or set ") + kCacheEnv);
            SolveCache cache(path);
            if (*stats_cmd) {
                const auto recs = cache.records();
                std::map<std::string, std::size_t> by_mode;
                for (const auto& r : recs) ++by_mode[r.mode];
                std::cout << "path: " << path << "\nrecords: " << recs.size() << '\n';
                for (const auto& [mode, count] : by_mode) std::cout << "  " << mode << ": " << count << '\n';
            } else if (*clear_cmd) {
                cache.clear();
                std::cout << "cleared " << path << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
