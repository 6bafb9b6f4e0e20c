#include "janossy/cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace janossy::cli {

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::add_row(std::vector<std::string> row)
{
    if (row.size() != header_.size())
        throw std::logic_error("Table: row width does not match header");
    rows_.push_back(std::move(row));
}

void Table::add_row(const std::vector<double>& row)
{
    std::vector<std::string> s;
    s.reserve(row.size());
    for (double v : row)
        s.push_back(fmt17(v));
    add_row(std::move(s));
}

namespace {

void put_field(std::string& out, const std::string& f)
{
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
        out += f;
        return;
    }
    out += '"';
    for (char c : f) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
}

void put_row(std::string& out, const std::vector<std::string>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i)
            out += ',';
        put_field(out, row[i]);
    }
    out += '\n';
}

} // namespace

std::string Table::to_csv() const
{
    std::string out;
    put_row(out, header_);
    for (const auto& r : rows_)
        put_row(out, r);
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content)
{
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (!dir.empty())
        fs::create_directories(dir);
    std::random_device rd;
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write " + tmp.string());
        f << content;
        f.flush();
        if (!f)
            throw std::runtime_error("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace janossy::cli
