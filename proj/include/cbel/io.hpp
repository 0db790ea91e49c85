#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbel/transforms.hpp"

// File formats.
//
// Assignment documents are JSON:
//
//   {
//     "frame": ["a", "b"],
//     "masses": [
//       {"set": ["a"], "re": 0.3, "im": 0.4},
//       {"set": ["b"], "magnitude": 0.5, "phase": -0.9272952180016122}
//     ],
//     "tolerance": 1e-9
//   }
//
// Each mass entry carries exactly one representation: rectangular ("re" and
// "im") or polar ("magnitude" and "phase", phase in [-pi, pi], folded onto
// (-pi, pi] on load). "tolerance" is optional. Unknown fields are rejected.
//
// Table files hold one row per proposition in ascending bitmask order, with
// the row's events joined by '|' and the three measures rendered to 12
// significant digits. CSV uses the fixed header "set,com,bel,pl"; the JSON
// form is {"frame": [...], "rows": [{"set": [...], "com": c, "bel": b,
// "pl": p}, ...]} with the same values.

namespace cbel::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// 12-significant-digit shortest rendering used by table files.
inline std::string format_value(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// The double actually denoted by a table file cell.
inline double table_value(double v) { return std::stod(format_value(v)); }

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("IoError: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("IoError: cannot read " + path.string());
    return std::move(buffer).str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("IoError: cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("IoError: cannot write " + path.string());
}

/// A parsed assignment document, before the construction conditions are
/// checked. Carries the document's own tolerance when it names one.
struct CbbaDocument {
    Frame frame;
    std::vector<Cbba::Entry> entries;
    std::optional<double> tolerance;
};

enum class MassForm { rectangular, polar };

namespace detail {

inline void require_keys(const json& object, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* name : allowed) known |= key == name;
        if (!known)
            throw ParseError(std::string{"ParseError: unknown field \""} + key + "\" in " + where);
    }
}

inline double number_field(const json& object, const char* key, const char* where) {
    const auto it = object.find(key);
    if (it == object.end() || !it->is_number())
        throw ParseError(std::string{"ParseError: "} + where + " needs a numeric \"" + key + "\"");
    return it->get<double>();
}

inline std::vector<std::string> string_array(const json& value, const char* where) {
    if (!value.is_array())
        throw ParseError(std::string{"ParseError: "} + where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw ParseError(std::string{"ParseError: "} + where + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

inline ComplexScalar parse_mass_value(const json& entry) {
    const bool rect = entry.contains("re") || entry.contains("im");
    const bool polar = entry.contains("magnitude") || entry.contains("phase");
    if (rect == polar)
        throw ParseError("ParseError: a mass entry needs either re/im or magnitude/phase");
    if (rect) {
        detail::require_keys(entry, {"set", "re", "im"}, "a rectangular mass entry");
        return {number_field(entry, "re", "a rectangular mass entry"),
                number_field(entry, "im", "a rectangular mass entry")};
    }
    detail::require_keys(entry, {"set", "magnitude", "phase"}, "a polar mass entry");
    const double magnitude = number_field(entry, "magnitude", "a polar mass entry");
    const double phase = number_field(entry, "phase", "a polar mass entry");
    if (magnitude < 0.0)
        throw ParseError("ParseError: a polar magnitude must be non-negative");
    if (phase < -std::numbers::pi || phase > std::numbers::pi)
        throw ParseError("ParseError: a phase must lie in [-pi, pi]");
    return from_polar(magnitude, canonical_phase(phase));
}

} // namespace detail

inline CbbaDocument parse_cbba_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string{"ParseError: "} + e.what());
    }
    if (!root.is_object() || !root.contains("frame") || !root.contains("masses"))
        throw ParseError("ParseError: a document needs \"frame\" and \"masses\"");
    detail::require_keys(root, {"frame", "masses", "tolerance"}, "the document");

    Frame frame(detail::string_array(root["frame"], "\"frame\""));
    if (!root["masses"].is_array())
        throw ParseError("ParseError: \"masses\" must be an array");

    std::vector<Cbba::Entry> entries;
    for (const auto& entry : root["masses"]) {
        if (!entry.is_object() || !entry.contains("set"))
            throw ParseError("ParseError: each mass entry needs a \"set\"");
        const auto labels = detail::string_array(entry["set"], "\"set\"");
        entries.emplace_back(frame.parse(labels), detail::parse_mass_value(entry));
    }

    CbbaDocument document{std::move(frame), std::move(entries), std::nullopt};
    if (root.contains("tolerance")) {
        if (!root["tolerance"].is_number() || !(root["tolerance"].get<double>() > 0.0))
            throw ParseError("ParseError: \"tolerance\" must be a positive number");
        document.tolerance = root["tolerance"].get<double>();
    }
    return document;
}

inline CbbaDocument load_cbba_document(const std::filesystem::path& path) {
    return parse_cbba_document(read_text(path));
}

inline std::string format_cbba_document(const CbbaDocument& document, MassForm form) {
    ordered_json root;
    root["frame"] = document.frame.labels();
    root["masses"] = ordered_json::array();
    for (const auto& [set, value] : document.entries) {
        ordered_json entry;
        entry["set"] = document.frame.labels_of(set);
        if (form == MassForm::rectangular) {
            entry["re"] = value.re();
            entry["im"] = value.im();
        } else {
            entry["magnitude"] = value.modulus();
            entry["phase"] = value.is_zero() ? 0.0 : value.argument();
        }
        root["masses"].push_back(std::move(entry));
    }
    if (document.tolerance) root["tolerance"] = *document.tolerance;
    return root.dump(2) + "\n";
}

inline void save_cbba_document(const std::filesystem::path& path, const CbbaDocument& document,
                               MassForm form = MassForm::rectangular) {
    write_text(path, format_cbba_document(document, form));
}

/// Commitment, belief and plausibility for every proposition of a frame, in
/// ascending bitmask order.
struct TableDocument {
    Frame frame;
    std::vector<double> com;
    std::vector<double> bel;
    std::vector<double> pl;
};

inline TableDocument make_table_document(const Cbba& cbba) {
    BeliefTable com = commitment_table(cbba);
    BeliefTable bel = gbel_table(cbba);
    BeliefTable pl = gpl_table(cbba);
    return {cbba.frame(),
            {com.values().begin(), com.values().end()},
            {bel.values().begin(), bel.values().end()},
            {pl.values().begin(), pl.values().end()}};
}

inline std::string format_table_csv(const TableDocument& table) {
    std::string out = "set,com,bel,pl\n";
    for (std::uint32_t mask = 0; mask < table.com.size(); ++mask) {
        out += table.frame.join(Proposition{mask}, "|");
        out += ',';
        out += format_value(table.com[mask]);
        out += ',';
        out += format_value(table.bel[mask]);
        out += ',';
        out += format_value(table.pl[mask]);
        out += '\n';
    }
    return out;
}

inline std::string format_table_json(const TableDocument& table) {
    ordered_json root;
    root["frame"] = table.frame.labels();
    root["rows"] = ordered_json::array();
    for (std::uint32_t mask = 0; mask < table.com.size(); ++mask) {
        ordered_json row;
        row["set"] = table.frame.labels_of(Proposition{mask});
        row["com"] = table_value(table.com[mask]);
        row["bel"] = table_value(table.bel[mask]);
        row["pl"] = table_value(table.pl[mask]);
        root["rows"].push_back(std::move(row));
    }
    return root.dump(2) + "\n";
}

namespace detail {

inline int table_frame_size(std::size_t rows) {
    if (rows < 2 || !std::has_single_bit(rows))
        throw InvalidTable("InvalidTable: row count must be a power of two (one row per subset)");
    const int n = std::countr_zero(rows);
    if (n > max_dense_frame_size) throw FrameTooLarge(n, max_dense_frame_size);
    return n;
}

inline double table_cell_value(double v) {
    if (v < -monotonicity_slack || v > 1.0 + monotonicity_slack)
        throw InvalidTable("InvalidTable: value " + format_value(v) + " outside [0, 1]");
    return v;
}

inline double table_cell(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw InvalidTable("InvalidTable: bad number \"" + text + "\"");
        return table_cell_value(v);
    } catch (const std::logic_error&) {
        throw InvalidTable("InvalidTable: bad number \"" + text + "\"");
    }
}

inline Frame table_frame(std::vector<std::string> labels) {
    try {
        return Frame(std::move(labels));
    } catch (const InvalidFrame& e) {
        throw InvalidTable(std::string{"InvalidTable: "} + e.what());
    }
}

} // namespace detail

inline TableDocument parse_table_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty() || lines.front() != "set,com,bel,pl")
        throw InvalidTable("InvalidTable: missing \"set,com,bel,pl\" header");
    const std::size_t rows = lines.size() - 1;
    const int n = detail::table_frame_size(rows);

    std::vector<std::array<std::string, 4>> fields(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string& row = lines[i + 1];
        std::array<std::string, 4> cell;
        std::size_t start = 0;
        int column = 0;
        for (std::size_t pos = 0; pos <= row.size(); ++pos) {
            if (pos == row.size() || row[pos] == ',') {
                if (column > 3) throw InvalidTable("InvalidTable: too many columns in a row");
                cell[column++] = row.substr(start, pos - start);
                start = pos + 1;
            }
        }
        if (column != 4) throw InvalidTable("InvalidTable: each row needs 4 columns");
        fields[i] = std::move(cell);
    }

    // Frame labels come from the singleton rows.
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(fields[std::size_t{1} << i][0]);
    Frame frame = detail::table_frame(std::move(labels));

    TableDocument table{frame, std::vector<double>(rows), std::vector<double>(rows),
                        std::vector<double>(rows)};
    for (std::uint32_t mask = 0; mask < rows; ++mask) {
        if (fields[mask][0] != frame.join(Proposition{mask}, "|"))
            throw InvalidTable("InvalidTable: row " + std::to_string(mask) +
                               " is out of order or mislabeled");
        table.com[mask] = detail::table_cell(fields[mask][1]);
        table.bel[mask] = detail::table_cell(fields[mask][2]);
        table.pl[mask] = detail::table_cell(fields[mask][3]);
    }
    return table;
}

inline TableDocument parse_table_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidTable(std::string{"InvalidTable: "} + e.what());
    }
    if (!root.is_object() || !root.contains("frame") || !root.contains("rows"))
        throw InvalidTable("InvalidTable: a table needs \"frame\" and \"rows\"");
    try {
        detail::require_keys(root, {"frame", "rows"}, "the table");
        Frame frame = detail::table_frame(detail::string_array(root["frame"], "\"frame\""));
        if (!root["rows"].is_array())
            throw InvalidTable("InvalidTable: \"rows\" must be an array");
        const std::size_t rows = root["rows"].size();
        if (rows != frame.proposition_count())
            throw InvalidTable("InvalidTable: expected one row per subset of the frame");
        detail::table_frame_size(rows);

        TableDocument table{frame, std::vector<double>(rows), std::vector<double>(rows),
                            std::vector<double>(rows)};
        for (std::uint32_t mask = 0; mask < rows; ++mask) {
            const json& row = root["rows"][mask];
            if (!row.is_object()) throw InvalidTable("InvalidTable: each row must be an object");
            detail::require_keys(row, {"set", "com", "bel", "pl"}, "a table row");
            const auto labels = detail::string_array(row.contains("set") ? row["set"] : json{},
                                                     "a row \"set\"");
            if (labels != frame.labels_of(Proposition{mask}))
                throw InvalidTable("InvalidTable: row " + std::to_string(mask) +
                                   " is out of order or mislabeled");
            table.com[mask] =
                detail::table_cell_value(detail::number_field(row, "com", "a table row"));
            table.bel[mask] =
                detail::table_cell_value(detail::number_field(row, "bel", "a table row"));
            table.pl[mask] =
                detail::table_cell_value(detail::number_field(row, "pl", "a table row"));
        }
        return table;
    } catch (const ParseError& e) {
        throw InvalidTable(std::string{"InvalidTable: "} + e.what());
    }
}

/// Loads a table file, telling JSON from CSV by the first non-space byte.
inline TableDocument load_table_document(const std::filesystem::path& path) {
    const std::string text = read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_table_json(text);
    return parse_table_csv(text);
}

} // namespace cbel::io
