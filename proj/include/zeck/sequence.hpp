#pragma once

// (c,k)-nacci numbers and the greedy generalized Zeckendorf decomposition.
//
//   S_1 = 1
//   S_{i+1} = c (S_i + ... + S_1) + 1          for 1 <= i < k+1
//   S_{i+1} = c (S_i + ... + S_{i-k})          for i >= k+1
//
// (1,1) is Fibonacci with F_1 = 1, F_2 = 2; (1,2) is Tribonacci.
// Indices are 1-based everywhere in this library.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeck {

class GameState;

struct GameParams {
    unsigned c = 1;
    unsigned k = 1;

    // Throws std::invalid_argument unless c >= 1 and k >= 1.
    void validate() const;

    std::string to_string() const;

    friend bool operator==(const GameParams&, const GameParams&) = default;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class Sequence {
public:
    Sequence(GameParams params, std::vector<std::uint64_t> terms);

    const GameParams& params() const { return params_; }
    const std::vector<std::uint64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // S_i, 1-based. Throws std::out_of_range past the generated prefix.
    std::uint64_t term(std::size_t i) const;

    // Largest index i with S_i <= value, or 0 when value == 0.
    std::size_t largest_index_at_most(std::uint64_t value) const;

private:
    GameParams params_;
    std::vector<std::uint64_t> terms_;
};

// All terms S_i <= bound followed by the first term exceeding bound.
Sequence generate_terms(GameParams params, std::uint64_t bound);

// The first `count` terms S_1..S_count.
Sequence generate_prefix(GameParams params, std::size_t count);

// Repeatedly subtract the largest S_i not exceeding what is left.
GameState decompose_greedy(GameParams params, std::uint64_t n);

}  // namespace zeck
