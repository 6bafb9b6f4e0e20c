#include "janossy/cli/cache.hpp"

#include "janossy/cli/output.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>

namespace janossy::cli {

std::uint64_t fnv1a(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string Cache::key(const RunConfig& cfg)
{
    return cfg.command + "-" + hex(fnv1a(cfg.canonical()));
}

std::optional<CacheEntry> Cache::lookup(const RunConfig& cfg, std::ostream& warn) const
{
    namespace fs = std::filesystem;
    const std::string k = key(cfg);
    fs::path csv = root_ / (k + ".csv"), side = root_ / (k + ".json");
    if (!fs::exists(csv) && !fs::exists(side))
        return std::nullopt;
    try {
        CacheEntry e;
        e.csv = read_file(csv);
        auto j = nlohmann::json::parse(read_file(side));
        if (RunConfig::from_json(j.at("config").dump()) != cfg)
            throw std::runtime_error("config mismatch");
        if (j.at("csv_fnv1a").get<std::string>() != hex(fnv1a(e.csv)))
            throw std::runtime_error("checksum mismatch");
        e.summary = j.at("summary").get<std::string>();
        return e;
    } catch (const std::exception& ex) {
        warn << "warning: corrupt cache entry " << k << " (" << ex.what() << "), recomputing\n";
        return std::nullopt;
    }
}

void Cache::store(const RunConfig& cfg, const CacheEntry& entry) const
{
    const std::string k = key(cfg);
    nlohmann::ordered_json j;
    j["config"] = nlohmann::ordered_json::parse(cfg.to_json());
    j["csv_fnv1a"] = hex(fnv1a(entry.csv));
    j["summary"] = entry.summary;
    write_atomic(root_ / (k + ".csv"), entry.csv);
    write_atomic(root_ / (k + ".json"), j.dump(2) + "\n");
}

std::optional<std::filesystem::path> cache_root(const std::string& flag)
{
    if (!flag.empty())
        return std::filesystem::path(flag);
    if (const char* env = std::getenv("JANOSSY_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

} // namespace janossy::cli
