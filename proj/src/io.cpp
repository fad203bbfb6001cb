#include "relmaser/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace relmaser {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : n_cols_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += columns[i];
    }
    buf_ += '\n';
}

void CsvWriter::add_cell(double v) { add_cell(format_double(v)); }

void CsvWriter::add_cell(std::uint64_t v) { add_cell(std::to_string(v)); }

void CsvWriter::add_cell(const std::string& v) {
    if (col_ >= n_cols_) throw std::logic_error("CsvWriter: row overflow");
    if (col_) buf_ += ',';
    buf_ += v;
    ++col_;
}

void CsvWriter::end_row() {
    if (col_ != n_cols_) throw std::logic_error("CsvWriter: incomplete row");
    buf_ += '\n';
    col_ = 0;
    ++n_rows_;
}

void CsvWriter::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string fnv1a64_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for hashing: " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char chunk[4096];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(chunk[i]);
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunManifest::RunManifest(std::string command, nlohmann::json params) {
    doc_["command"] = std::move(command);
    doc_["version"] = "relmaser 0.1.0";
    doc_["params"] = std::move(params);
    doc_["outputs"] = nlohmann::json::array();
}

void RunManifest::record_output(const std::filesystem::path& path, std::size_t rows) {
    doc_["outputs"].push_back({{"file", path.filename().string()},
                               {"rows", rows},
                               {"bytes", std::filesystem::file_size(path)},
                               {"fnv1a64", fnv1a64_hex(path)}});
}

void RunManifest::set_derived(const std::string& key, const nlohmann::json& value) {
    doc_["derived"][key] = value;
}

void RunManifest::write(const std::filesystem::path& out_dir) const {
    std::ofstream out(out_dir / "run.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir.string());
    out << doc_.dump(2) << '\n';
}

}  // namespace relmaser
