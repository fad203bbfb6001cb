// Flat-file output: CSV tables with round-trip-exact numbers, and the
// run manifest that records how every file was produced.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace relmaser {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// One CSV output file: header row, comma delimiter, LF endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);

    void add_cell(double v);
    void add_cell(std::uint64_t v);
    void add_cell(const std::string& v);
    void end_row();

    std::size_t rows() const { return n_rows_; }
    const std::string& buffer() const { return buf_; }
    void write(const std::filesystem::path& path) const;

private:
    std::size_t n_cols_;
    std::size_t col_ = 0;
    std::size_t n_rows_ = 0;
    std::string buf_;
};

// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string fnv1a64_hex(const std::filesystem::path& path);

// Accumulates the resolved parameters and output files of one CLI run and
// writes them as run.json next to the data, so the run can be replayed
// exactly (`--config <out>/run.json`).
class RunManifest {
public:
    RunManifest(std::string command, nlohmann::json params);

    void record_output(const std::filesystem::path& path, std::size_t rows);
    void set_derived(const std::string& key, const nlohmann::json& value);
    void write(const std::filesystem::path& out_dir) const;

    const nlohmann::json& json() const { return doc_; }

private:
    nlohmann::json doc_;
};

}  // namespace relmaser
