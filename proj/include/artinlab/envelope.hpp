#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

/// One table cell; a single source of truth for both output formats.
struct Cell {
    enum class Kind { Null, Int, UInt, Real, Text };
    Kind kind = Kind::Null;
    i64 i = 0;
    u64 u = 0;
    double d = 0.0;
    std::string s;

    static Cell null() { return {}; }
    static Cell of(i64 v) { return {Kind::Int, v, 0, 0.0, {}}; }
    static Cell of(u64 v) { return {Kind::UInt, 0, v, 0.0, {}}; }
    static Cell of(double v) { return {Kind::Real, 0, 0, v, {}}; }
    static Cell of(std::string v) { return {Kind::Text, 0, 0, 0.0, std::move(v)}; }

    /// %.17g for reals (round-trip exact), empty for null/NaN.
    std::string to_csv_string() const;
};

/// Canonical machine-readable result of one CLI invocation. Results are
/// a rectangular table; serialization is deterministic given identical
/// inputs (elapsed_ms lives in metadata only).
struct OutputEnvelope {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
    u64 prime_table_limit = 0;
    std::int64_t elapsed_ms = 0;

    std::string to_csv() const;
    std::string to_json() const;
};

/// Serializes in the requested format ("csv" or "json") to stdout, or
/// atomically (temp file + rename) to path when nonempty.
void write_output(const OutputEnvelope& envelope, const std::string& format,
                  const std::string& path);

}  // namespace artinlab
