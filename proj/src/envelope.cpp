#include "artinlab/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "artinlab/version.hpp"

namespace artinlab {

std::string Cell::to_csv_string() const {
    char buf[40];
    switch (kind) {
        case Kind::Null:
            return "";
        case Kind::Int:
            return std::to_string(i);
        case Kind::UInt:
            return std::to_string(u);
        case Kind::Real:
            if (!std::isfinite(d)) return "";
            std::snprintf(buf, sizeof buf, "%.17g", d);
            return buf;
        case Kind::Text:
            return s;
    }
    return "";
}

std::string OutputEnvelope::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c].to_csv_string();
        }
        out += '\n';
    }
    return out;
}

std::string OutputEnvelope::to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json jparams = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) jparams[k] = v;
    doc["params"] = jparams;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < columns.size(); ++c) {
            const Cell& cell = row[c];
            switch (cell.kind) {
                case Cell::Kind::Null:
                    jrow[columns[c]] = nullptr;
                    break;
                case Cell::Kind::Int:
                    jrow[columns[c]] = cell.i;
                    break;
                case Cell::Kind::UInt:
                    jrow[columns[c]] = cell.u;
                    break;
                case Cell::Kind::Real:
                    if (std::isfinite(cell.d))
                        jrow[columns[c]] = cell.d;
                    else
                        jrow[columns[c]] = nullptr;
                    break;
                case Cell::Kind::Text:
                    jrow[columns[c]] = cell.s;
                    break;
            }
        }
        jrows.push_back(std::move(jrow));
    }
    doc["results"] = jrows;
    doc["metadata"] = {{"version", kVersion},
                       {"prime_table_limit", prime_table_limit},
                       {"elapsed_ms", elapsed_ms},
                       {"warnings", warnings}};
    return doc.dump(2) + "\n";
}

void write_output(const OutputEnvelope& envelope, const std::string& format,
                  const std::string& path) {
    std::string payload = format == "csv" ? envelope.to_csv() : envelope.to_json();
    if (format == "csv") {
        // CSV has no metadata section; diagnostics go to stderr
        for (const auto& w : envelope.warnings) std::cerr << "warning: " << w << "\n";
    }
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + tmp);
        out << payload;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename output into place: " + path);
}

}  // namespace artinlab
