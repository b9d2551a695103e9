#pragma once

// JSON rendering of solve results and the persistent solve cache.
//
// Report schema (one object, keys in this order):
//   {schema_version, params:{c,k}, n, mode, players, seating, winners:[...],
//    states_visited, cache_hit, policy_digest}
// Cache file: one record object per line.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zeck/solver.hpp"

namespace zeck {

inline constexpr int kSchemaVersion = 1;

struct CacheRecord {
    int schema_version = kSchemaVersion;
    GameParams params;
    std::uint64_t n = 0;
    std::string mode;
    int players = 2;
    std::string seating;
    std::optional<std::string> focal;
    std::vector<std::string> winners;
    std::size_t states_visited = 0;
    std::optional<std::string> policy_digest;
    std::string timestamp;

    std::string to_line() const;
    // Throws CacheSchemaError on unknown schema_version, ParseError-like
    // std::invalid_argument on malformed lines.
    static CacheRecord from_line(std::string_view line);

    bool same_query(const CacheRecord& other) const;
};

class CacheSchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CacheRecord make_record(const SolveReport& report, std::string timestamp = {});
nlohmann::ordered_json report_json(const CacheRecord& record, bool cache_hit);
inline nlohmann::ordered_json report_json(const SolveReport& report) {
    return report_json(make_record(report), false);
}

std::string utc_timestamp();

class SolveCache {
public:
    explicit SolveCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    std::vector<CacheRecord> records() const;
    std::optional<CacheRecord> lookup(const CacheRecord& query) const;
    void append(const CacheRecord& record) const;
    void clear() const;

private:
    std::filesystem::path path_;
};

}  // namespace zeck
