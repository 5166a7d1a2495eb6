#include "tlab/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tlab/errors.hpp"

namespace tlab {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot open for writing: " + path.string());
    out << text;
    if (!out.good()) throw InvalidInputError("failed writing: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void CsvWriter::add_row(const std::vector<double>& values) {
    std::string row;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += format_g17(values[i]);
    }
    rows_.push_back(std::move(row));
}

void CsvWriter::add_row_mixed(const std::vector<std::string>& cells) {
    std::string row;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    rows_.push_back(std::move(row));
}

std::string CsvWriter::str() const {
    std::string out;
    for (size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& r : rows_) {
        out += r;
        out += '\n';
    }
    return out;
}

void CsvWriter::save(const std::filesystem::path& path) const { write_text_file(path, str()); }

} // namespace tlab
