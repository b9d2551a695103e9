#include "zeck/engine.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace zeck {

namespace {

const char* kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::Carry: return "carry";
        case MoveKind::LowCombine: return "lowcombine";
        case MoveKind::Combine: return "combine";
    }
    return "?";
}

std::string requirement_text(const std::vector<Entry>& need) {
    std::string out;
    for (const auto& e : need) {
        if (!out.empty()) out += ", ";
        out += std::to_string(e.count) + " x S_" + std::to_string(e.index);
    }
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

GameState GameState::from_entries(std::vector<Entry> entries) {
    std::map<Index, std::uint64_t> merged;
    for (const auto& e : entries) {
        if (e.index < 1) throw std::invalid_argument("term indices start at 1");
        merged[e.index] += e.count;
    }
    std::vector<Entry> out;
    out.reserve(merged.size());
    for (const auto& [i, m] : merged)
        if (m > 0) out.push_back({i, static_cast<Count>(m)});
    return GameState(std::move(out));
}

Count GameState::count(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index v) { return e.index < v; });
    return (it != entries_.end() && it->index == i) ? it->count : 0;
}

std::uint64_t GameState::token_count() const {
    std::uint64_t total = 0;
    for (const auto& e : entries_) total += e.count;
    return total;
}

std::uint64_t GameState::value(GameParams params) const {
    if (entries_.empty()) return 0;
    const Sequence seq = generate_prefix(params, max_index());
    std::uint64_t total = 0;
    for (const auto& e : entries_) total += e.count * seq.term(e.index);
    return total;
}

std::string to_string(Move move) {
    return std::string(kind_name(move.kind)) + "(" + std::to_string(move.index) + ")";
}

Move parse_move(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw ParseError("expected kind(index)", open == std::string_view::npos ? 0 : text.size());
    const auto kind = text.substr(0, open);
    Move m{};
    if (kind == "carry") m.kind = MoveKind::Carry;
    else if (kind == "lowcombine") m.kind = MoveKind::LowCombine;
    else if (kind == "combine") m.kind = MoveKind::Combine;
    else throw ParseError("unknown move kind '" + std::string(kind) + "'", 0);
    const auto digits = text.substr(open + 1, text.size() - open - 2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m.index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || m.index < 1)
        throw ParseError("bad move index", open + 1);
    return m;
}

GameState initial_state(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return GameState::from_entries({{1, static_cast<Count>(n)}});
}

MoveEffect move_effect(GameParams p, Move move) {
    const Index i = move.index;
    const Index k = p.k;
    const Count c = p.c;
    MoveEffect fx;
    switch (move.kind) {
        case MoveKind::Combine:
            if (i < k + 1) throw IllegalMoveError(to_string(move) + " requires index >= k+1");
            for (Index j = i - k; j <= i; ++j) fx.consumed.push_back({j, c});
            fx.produced.push_back({i + 1, 1});
            break;
        case MoveKind::LowCombine:
            if (i < 2 || i > k) throw IllegalMoveError(to_string(move) + " requires 2 <= index <= k");
            fx.consumed.push_back({1, c + 1});
            for (Index j = 2; j <= i; ++j) fx.consumed.push_back({j, c});
            fx.produced.push_back({i + 1, 1});
            break;
        case MoveKind::Carry:
            if (i < 1) throw IllegalMoveError("carry index must be >= 1");
            fx.consumed.push_back({i, c + 1});
            if (i == k + 1) fx.produced.push_back({1, 1});
            else if (i > k + 1) fx.produced.push_back({i - k - 1, c});
            fx.produced.push_back({i + 1, 1});
            break;
    }
    return fx;
}

namespace {

bool has_all(const GameState& s, const std::vector<Entry>& need) {
    for (const auto& e : need)
        if (s.count(e.index) < e.count) return false;
    return true;
}

}  // namespace

std::vector<Move> legal_moves(GameParams p, const GameState& s) {
    std::vector<Move> out;
    const Count c = p.c;
    const Index k = p.k;
    for (const auto& e : s.entries())
        if (e.count >= c + 1) out.push_back({MoveKind::Carry, e.index});

    // LowCombine(i) needs c+1 of S_1 and c of each S_2..S_i, so the valid i
    // form a prefix run starting at 2.
    if (s.count(1) >= c + 1) {
        for (Index i = 2; i <= k && s.count(i) >= c; ++i) out.push_back({MoveKind::LowCombine, i});
    }

    // Combine(i) needs a window of k+1 consecutive indices each holding >= c.
    const auto& es = s.entries();
    Index run_start = 0;
    Index prev = 0;
    for (const auto& e : es) {
        if (e.count < c) {
            run_start = 0;
            prev = e.index;
            continue;
        }
        if (run_start == 0 || e.index != prev + 1) run_start = e.index;
        prev = e.index;
        if (e.index - run_start >= k) out.push_back({MoveKind::Combine, e.index});
    }
    return out;
}

bool is_legal(GameParams p, const GameState& s, Move move) {
    if (move.kind == MoveKind::Combine && move.index < p.k + 1) return false;
    if (move.kind == MoveKind::LowCombine && (move.index < 2 || move.index > p.k)) return false;
    if (move.index < 1) return false;
    return has_all(s, move_effect(p, move).consumed);
}

GameState apply_move(GameParams p, const GameState& s, Move move) {
    const MoveEffect fx = move_effect(p, move);
    for (const auto& need : fx.consumed) {
        const Count have = s.count(need.index);
        if (have < need.count)
            throw IllegalMoveError(to_string(move) + " needs " + requirement_text(fx.consumed) + " but S_" +
                                   std::to_string(need.index) + " has multiplicity " + std::to_string(have));
    }
    std::map<Index, std::int64_t> counts;
    for (const auto& e : s.entries()) counts[e.index] += e.count;
    for (const auto& e : fx.consumed) counts[e.index] -= e.count;
    for (const auto& e : fx.produced) counts[e.index] += e.count;
    std::vector<Entry> out;
    out.reserve(counts.size());
    for (const auto& [i, m] : counts)
        if (m > 0) out.push_back({i, static_cast<Count>(m)});
    return GameState::from_entries(std::move(out));
}

bool is_terminal(GameParams p, const GameState& s) { return legal_moves(p, s).empty(); }

std::string canonical_encode(const GameState& s) {
    std::string out;
    for (const auto& e : s.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.index);
        out += '^';
        out += std::to_string(e.count);
    }
    return out;
}

GameState canonical_decode(std::string_view text) {
    if (text.empty()) throw ParseError("empty state encoding", 0);
    std::vector<Entry> entries;
    std::size_t pos = 0;
    auto read_number = [&](const char* what) -> std::uint32_t {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + pos) throw ParseError(std::string("expected ") + what, pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (v == 0) throw ParseError(std::string(what) + " must be positive", pos - 1);
        return v;
    };
    while (true) {
        const Index i = read_number("index");
        if (pos >= text.size() || text[pos] != '^') throw ParseError("expected '^'", pos);
        ++pos;
        const Count m = read_number("multiplicity");
        if (!entries.empty() && entries.back().index >= i)
            throw ParseError("indices must be strictly ascending", pos);
        entries.push_back({i, m});
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return GameState::from_entries(std::move(entries));
}

MonovariantRank monovariant_rank(const GameState& s) {
    MonovariantRank r;
    for (const auto& e : s.entries()) {
        r.token_count += e.count;
        r.index_sum += static_cast<std::uint64_t>(e.count) * e.index;
    }
    r.s2_count = s.count(2);
    return r;
}

namespace {

const char* wedge(bool unicode, bool spaced) {
    if (unicode) return spaced ? " ∧ " : "∧";
    return " ^ ";
}

std::string token_list(const Sequence& seq, std::vector<Entry> tokens, bool unicode) {
    std::sort(tokens.begin(), tokens.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    std::string out;
    for (const auto& e : tokens)
        for (Count j = 0; j < e.count; ++j) {
            if (!out.empty()) out += wedge(unicode, false);
            out += std::to_string(seq.term(e.index));
        }
    return out;
}

}  // namespace

std::string wedge_notation(GameParams p, const GameState& s, bool unicode) {
    if (s.empty()) return "{}";
    const Sequence seq = generate_prefix(p, s.max_index());
    std::string out;
    for (const auto& e : s.entries()) {
        if (!out.empty()) out += wedge(unicode, true);
        out += std::to_string(seq.term(e.index));
        if (e.count != 1) out += "^" + std::to_string(e.count);
    }
    return out;
}

std::string describe_move(GameParams p, Move move, bool unicode) {
    const MoveEffect fx = move_effect(p, move);
    const Sequence seq = generate_prefix(p, move.index + 1);
    return token_list(seq, fx.consumed, unicode) + (unicode ? "→" : " -> ") + token_list(seq, fx.produced, unicode);
}

std::size_t GameStateHash::operator()(const GameState& s) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& e : s.entries()) {
        h = (h ^ e.index) * 1099511628211ull;
        h = (h ^ e.count) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace zeck
