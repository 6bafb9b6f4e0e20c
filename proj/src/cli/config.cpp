#include "janossy/cli/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <set>

namespace janossy::cli {

std::string RunConfig::canonical() const
{
    std::string s = command + "\n";
    for (const auto& [k, v] : params)
        s += k + "=" + v + "\n";
    return s;
}

std::string RunConfig::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params)
        j["params"][k] = v;
    return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        c.params[k] = v.get<std::string>();
    return c;
}

namespace {

std::string flag_name(const std::string& arg)
{
    if (arg.rfind("--", 0) != 0 || arg.size() == 2)
        return {};
    return arg.substr(2, arg.find('=') - 2);
}

} // namespace

std::vector<std::string> inject_config(const std::vector<std::string>& args)
{
    std::string path;
    std::set<std::string> given;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string name = flag_name(args[i]);
        if (name.empty())
            continue;
        given.insert(name);
        if (name == "config") {
            auto eq = args[i].find('=');
            if (eq != std::string::npos)
                path = args[i].substr(eq + 1);
            else if (i + 1 < args.size())
                path = args[i + 1];
            else
                throw UsageError("--config: missing file name");
        }
    }
    if (path.empty() || args.empty())
        return args;

    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::Error& e) {
        throw UsageError("--config " + path + ": " + e.what());
    }
    std::vector<std::string> extra;
    for (const auto& item : items) {
        // sections other than the current subcommand do not apply
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == args[0]))
            continue;
        if (item.name == "++" || item.name == "--")
            continue;
        if (given.count(item.name))
            continue;
        extra.push_back("--" + item.name);
        for (const auto& v : item.inputs)
            extra.push_back(v);
    }
    std::vector<std::string> out{args[0]};
    out.insert(out.end(), extra.begin(), extra.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

} // namespace janossy::cli
