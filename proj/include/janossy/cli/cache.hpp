#pragma once

#include "janossy/cli/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace janossy::cli {

std::uint64_t fnv1a(std::string_view data);

struct CacheEntry {
    std::string csv;
    std::string summary; // JSON text
};

// Directory of <key>.csv tables with <key>.json sidecars holding the config,
// the summary and a checksum of the table.
class Cache {
public:
    explicit Cache(std::filesystem::path root) : root_(std::move(root)) {}

    static std::string key(const RunConfig& cfg);
    const std::filesystem::path& root() const { return root_; }

    // Corrupt or mismatched entries are reported on warn and treated as misses.
    std::optional<CacheEntry> lookup(const RunConfig& cfg, std::ostream& warn) const;
    void store(const RunConfig& cfg, const CacheEntry& entry) const;

private:
    std::filesystem::path root_;
};

// The --cache-dir value if set, else JANOSSY_CACHE_DIR, else none.
std::optional<std::filesystem::path> cache_root(const std::string& flag);

} // namespace janossy::cli
