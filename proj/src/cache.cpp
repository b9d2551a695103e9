#include <fstream>

#include "zeck/report.hpp"

namespace zeck {

using nlohmann::ordered_json;

std::string CacheRecord::to_line() const {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["params"] = {{"c", params.c}, {"k", params.k}};
    j["n"] = n;
    j["mode"] = mode;
    j["players"] = players;
    j["seating"] = seating;
    j["focal"] = focal ? ordered_json(*focal) : ordered_json(nullptr);
    j["winners"] = winners;
    j["states_visited"] = states_visited;
    j["policy_digest"] = policy_digest ? ordered_json(*policy_digest) : ordered_json(nullptr);
    j["timestamp"] = timestamp;
    return j.dump();
}

CacheRecord CacheRecord::from_line(std::string_view line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed cache line: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version"))
        throw std::invalid_argument("cache line lacks schema_version");
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion)
        throw CacheSchemaError("cache record schema_version " + std::to_string(version) + " is not supported (expected " +
                               std::to_string(kSchemaVersion) + ")");
    CacheRecord rec;
    try {
        rec.schema_version = version;
        rec.params.c = j.at("params").at("c").get<unsigned>();
        rec.params.k = j.at("params").at("k").get<unsigned>();
        rec.n = j.at("n").get<std::uint64_t>();
        rec.mode = j.at("mode").get<std::string>();
        rec.players = j.at("players").get<int>();
        rec.seating = j.at("seating").get<std::string>();
        if (!j.at("focal").is_null()) rec.focal = j.at("focal").get<std::string>();
        rec.winners = j.at("winners").get<std::vector<std::string>>();
        rec.states_visited = j.at("states_visited").get<std::size_t>();
        if (!j.at("policy_digest").is_null()) rec.policy_digest = j.at("policy_digest").get<std::string>();
        rec.timestamp = j.at("timestamp").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed cache record: ") + e.what());
    }
    return rec;
}

bool CacheRecord::same_query(const CacheRecord& o) const {
    return params == o.params && n == o.n && mode == o.mode && players == o.players && seating == o.seating &&
           focal == o.focal;
}

SolveCache::SolveCache(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<CacheRecord> SolveCache::records() const {
    std::vector<CacheRecord> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(CacheRecord::from_line(line));
    return out;
}

std::optional<CacheRecord> SolveCache::lookup(const CacheRecord& query) const {
    for (auto& rec : records())
        if (rec.same_query(query)) return rec;
    return std::nullopt;
}

void SolveCache::append(const CacheRecord& record) const {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
    out << record.to_line() << '\n';
}

void SolveCache::clear() const {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
    if (ec) throw std::runtime_error("cannot remove cache file " + path_.string() + ": " + ec.message());
}

}  // namespace zeck
