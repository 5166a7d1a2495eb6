#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tlab {

/// 17-significant-digit decimal form; enough to round-trip a double and keep
/// report files byte-stable across runs.
std::string format_g17(double v);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// Comma-separated table with a header row; all floats via format_g17.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(const std::vector<double>& values);
    void add_row_mixed(const std::vector<std::string>& cells);
    size_t rows() const { return rows_.size(); }
    std::string str() const;
    void save(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
};

} // namespace tlab
