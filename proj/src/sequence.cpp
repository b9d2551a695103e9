#include "zeck/sequence.hpp"

#include <algorithm>
#include <limits>

#include "zeck/engine.hpp"

namespace zeck {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > kMax - b) throw OverflowError("(c,k)-nacci term exceeds 64-bit range");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) throw OverflowError("(c,k)-nacci term exceeds 64-bit range");
    return a * b;
}

// S_{len+1} from S_1..S_len.
std::uint64_t next_term(const GameParams& p, const std::vector<std::uint64_t>& terms) {
    const std::size_t len = terms.size();
    std::uint64_t window = 0;
    if (len < p.k + 1) {
        for (auto t : terms) window = checked_add(window, t);
        return checked_add(checked_mul(p.c, window), 1);
    }
    for (std::size_t j = len - p.k - 1; j < len; ++j) window = checked_add(window, terms[j]);
    return checked_mul(p.c, window);
}

}  // namespace

void GameParams::validate() const {
    if (c < 1) throw std::invalid_argument("parameter c must be >= 1");
    if (k < 1) throw std::invalid_argument("parameter k must be >= 1");
}

std::string GameParams::to_string() const {
    return "(" + std::to_string(c) + "," + std::to_string(k) + ")";
}

Sequence::Sequence(GameParams params, std::vector<std::uint64_t> terms)
    : params_(params), terms_(std::move(terms)) {}

std::uint64_t Sequence::term(std::size_t i) const {
    if (i < 1 || i > terms_.size())
        throw std::out_of_range("term index " + std::to_string(i) + " outside generated prefix");
    return terms_[i - 1];
}

std::size_t Sequence::largest_index_at_most(std::uint64_t value) const {
    auto it = std::upper_bound(terms_.begin(), terms_.end(), value);
    return static_cast<std::size_t>(it - terms_.begin());
}

Sequence generate_terms(GameParams params, std::uint64_t bound) {
    params.validate();
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    std::vector<std::uint64_t> terms{1};
    while (terms.back() <= bound) terms.push_back(next_term(params, terms));
    return Sequence(params, std::move(terms));
}

Sequence generate_prefix(GameParams params, std::size_t count) {
    params.validate();
    std::vector<std::uint64_t> terms;
    terms.reserve(count);
    if (count > 0) terms.push_back(1);
    while (terms.size() < count) terms.push_back(next_term(params, terms));
    return Sequence(params, std::move(terms));
}

GameState decompose_greedy(GameParams params, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Sequence seq = generate_terms(params, n);
    std::vector<Entry> entries;
    std::uint64_t rest = n;
    while (rest > 0) {
        const std::size_t i = seq.largest_index_at_most(rest);
        const std::uint64_t s = seq.term(i);
        const auto m = rest / s;
        entries.push_back({static_cast<Index>(i), static_cast<Count>(m)});
        rest -= m * s;
    }
    return GameState::from_entries(std::move(entries));
}

}  // namespace zeck
