#include "zeck/report.hpp"

#include <chrono>
#include <ctime>

namespace zeck {

using nlohmann::ordered_json;

CacheRecord make_record(const SolveReport& report, std::string timestamp) {
    CacheRecord rec;
    rec.params = report.params;
    rec.n = report.n;
    rec.mode = to_string(report.mode);
    rec.players = report.model.players();
    rec.seating = report.model.seating();
    if (report.model.focal) rec.focal = report.model.team_names.at(*report.model.focal);
    rec.winners = report.winner_names();
    rec.states_visited = report.states_visited;
    if (report.policy) rec.policy_digest = policy_digest(*report.policy);
    rec.timestamp = std::move(timestamp);
    return rec;
}

ordered_json report_json(const CacheRecord& rec, bool cache_hit) {
    ordered_json j;
    j["schema_version"] = rec.schema_version;
    j["params"] = {{"c", rec.params.c}, {"k", rec.params.k}};
    j["n"] = rec.n;
    j["mode"] = rec.mode;
    j["players"] = rec.players;
    j["seating"] = rec.seating;
    j["winners"] = rec.winners;
    j["states_visited"] = rec.states_visited;
    j["cache_hit"] = cache_hit;
    j["policy_digest"] = rec.policy_digest ? ordered_json(*rec.policy_digest) : ordered_json(nullptr);
    return j;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace zeck
