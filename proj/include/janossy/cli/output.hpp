#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace janossy::cli {

// 17 significant digits; round-trips any double.
std::string fmt17(double v);

class Table {
public:
    Table() = default;
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    void add_row(const std::vector<double>& row);
    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }

    // comma separated, LF line ends, one header row; fields quoted when needed
    std::string to_csv() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Writes to a temporary file in the target directory, then renames it over path.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

} // namespace janossy::cli
