#pragma once

// Game states, the move system, and the canonical text encoding.
//
// Moves for parameters (c,k), anchored at term index i:
//   Combine(i),    i >= k+1:    c S_{i-k} ^ ... ^ c S_i          -> S_{i+1}
//   LowCombine(i), 2 <= i <= k: (c+1) S_1 ^ c S_2 ^ ... ^ c S_i  -> S_{i+1}
//   Carry(i):                   (c+1) S_i -> S_{i+1}                 i <  k+1
//                                         -> S_{i+1} ^ S_1           i == k+1
//                                         -> S_{i+1} ^ c S_{i-k-1}   i >  k+1
// LowCombine(1) would coincide with Carry(1) and is never generated.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeck/sequence.hpp"

namespace zeck {

using Index = std::uint32_t;
using Count = std::uint32_t;

struct Entry {
    Index index;
    Count count;
    friend bool operator==(const Entry&, const Entry&) = default;
};

// Immutable multiset of term indices. Entries are kept sorted by index and
// never hold a zero count, so structural equality is canonical equality.
class GameState {
public:
    GameState() = default;

    // Accepts entries in any order; merges duplicates and drops zero counts.
    static GameState from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Count count(Index i) const;
    Index max_index() const { return entries_.empty() ? 0 : entries_.back().index; }
    std::uint64_t token_count() const;

    // Sum of count * S_index.
    std::uint64_t value(GameParams params) const;

    friend bool operator==(const GameState&, const GameState&) = default;
    friend auto operator<=>(const GameState& a, const GameState& b) {
        return std::lexicographical_compare_three_way(
            a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
            [](const Entry& x, const Entry& y) {
                if (auto r = x.index <=> y.index; r != 0) return r;
                return x.count <=> y.count;
            });
    }

private:
    explicit GameState(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}
    std::vector<Entry> entries_;
};

enum class MoveKind : std::uint8_t { Carry, LowCombine, Combine };

// Legal-move order is (kind, index) ascending with Carry < LowCombine < Combine.
struct Move {
    MoveKind kind;
    Index index;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

// "carry(2)", "lowcombine(2)", "combine(3)"
std::string to_string(Move move);
// Inverse of to_string; throws ParseError.
Move parse_move(std::string_view text);

class IllegalMoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

GameState initial_state(std::uint64_t n);

// Tokens a move consumes and produces, as (index, count) lists.
struct MoveEffect {
    std::vector<Entry> consumed;
    std::vector<Entry> produced;
};
MoveEffect move_effect(GameParams params, Move move);

std::vector<Move> legal_moves(GameParams params, const GameState& state);
bool is_legal(GameParams params, const GameState& state, Move move);
GameState apply_move(GameParams params, const GameState& state, Move move);
bool is_terminal(GameParams params, const GameState& state);

// "1^7,3^4,4^2"
std::string canonical_encode(const GameState& state);
GameState canonical_decode(std::string_view text);

// Acyclicity certificate: strictly decreases lexicographically under every
// legal move.
struct MonovariantRank {
    std::uint64_t token_count = 0;
    std::uint64_t index_sum = 0;
    std::uint64_t s2_count = 0;

    friend bool operator==(const MonovariantRank&, const MonovariantRank&) = default;
    friend auto operator<=>(const MonovariantRank&, const MonovariantRank&) = default;
};
MonovariantRank monovariant_rank(const GameState& state);

// Human notation using term values, e.g. "1^7 ∧ 3^4 ∧ 5^2". With
// unicode=false the wedge is rendered " ^ ".
std::string wedge_notation(GameParams params, const GameState& state, bool unicode = false);
// e.g. "1∧1→2" or "2 ^ 2 -> 1 ^ 3".
std::string describe_move(GameParams params, Move move, bool unicode = false);

struct GameStateHash {
    std::size_t operator()(const GameState& s) const noexcept;
};

}  // namespace zeck

template <>
struct std::hash<zeck::GameState> : zeck::GameStateHash {};
