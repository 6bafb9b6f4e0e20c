#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace janossy::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Command name plus every computational parameter, defaults filled in.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> params;

    // "command\nkey=value\n..." in key order; input to the cache hash
    std::string canonical() const;
    std::string to_json() const;
    static RunConfig from_json(const std::string& text);
    bool operator==(const RunConfig&) const = default;
};

// Expands `--config FILE` (flat `key = value` lines, lists in brackets) into
// flags placed right after the subcommand. Keys also given on the command
// line are skipped, so flags take precedence over the file. args excludes
// the program name.
std::vector<std::string> inject_config(const std::vector<std::string>& args);

} // namespace janossy::cli
