#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbel/io.hpp"

// Command line front end. Subcommands:
//
//   validate <file>                             check the construction conditions
//   query <file> --kind bel|pl|com --set a,b    one value, 12 decimal places
//   table <file> --format csv|json --out <path> whole-lattice table
//   invert <table> --out <path>                 commitment from a belief column
//   random --frame-size N --focals K --seed S --out <path>
//   degenerate <file>                           compare against the classical functions
//
// --tolerance overrides the document's own tolerance (default 1e-9).
//
// Exit codes: 0 success, 1 IO/parse trouble, 2 a semantic condition failed,
// 3 a resource limit was hit.

namespace cbel::cli {

namespace detail {

inline std::string format_fixed12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

inline std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',') {
            out.push_back(text.substr(start, pos - start));
            start = pos + 1;
        }
    }
    return out;
}

inline double pick_tolerance(const std::optional<double>& flag, const io::CbbaDocument& document) {
    if (flag) return *flag;
    if (document.tolerance) return *document.tolerance;
    return default_mass_tolerance;
}

inline int cmd_validate(const std::string& path, const std::optional<double>& tolerance,
                        std::ostream& err) {
    const io::CbbaDocument document = io::load_cbba_document(path);
    const ValidationReport report =
        Cbba::validate(document.frame, document.entries, pick_tolerance(tolerance, document));
    if (report.ok()) return 0;
    for (const Violation& violation : report.violations)
        err << violation.describe(document.frame) << "\n";
    return 2;
}

inline int cmd_query(const std::string& path, const std::string& kind, const std::string& set,
                     const std::optional<double>& tolerance, std::ostream& out) {
    const io::CbbaDocument document = io::load_cbba_document(path);
    const Cbba cbba =
        Cbba::build(document.frame, document.entries, pick_tolerance(tolerance, document));
    const auto labels = split_labels(set);
    const Proposition a = cbba.frame().parse(labels);
    double value = 0.0;
    if (kind == "bel") value = gbel(cbba, a);
    else if (kind == "pl") value = gpl(cbba, a);
    else value = cbba.commitment(a);
    out << format_fixed12(value) << "\n";
    return 0;
}

inline int cmd_table(const std::string& path, const std::string& format, const std::string& out_path,
                     const std::optional<double>& tolerance) {
    const io::CbbaDocument document = io::load_cbba_document(path);
    const Cbba cbba =
        Cbba::build(document.frame, document.entries, pick_tolerance(tolerance, document));
    const io::TableDocument table = io::make_table_document(cbba);
    io::write_text(out_path,
                   format == "json" ? io::format_table_json(table) : io::format_table_csv(table));
    return 0;
}

inline int cmd_invert(const std::string& path, const std::string& out_path) {
    const std::string text = io::read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool json_form = first != std::string::npos && text[first] == '{';
    const io::TableDocument input =
        json_form ? io::parse_table_json(text) : io::parse_table_csv(text);

    const BeliefTable bel(input.frame, TableKind::belief, input.bel);
    const BeliefTable com = mobius_invert(bel);

    io::TableDocument output{input.frame,
                             {com.values().begin(), com.values().end()},
                             input.bel,
                             std::vector<double>(input.bel.size())};
    for (std::uint32_t mask = 1; mask < output.pl.size(); ++mask)
        output.pl[mask] = 1.0 - input.bel[input.frame.complement(Proposition{mask}).bits()];
    output.pl[0] = 0.0;
    io::write_text(out_path,
                   json_form ? io::format_table_json(output) : io::format_table_csv(output));
    return 0;
}

inline int cmd_random(int frame_size, int focals, std::uint64_t seed, const std::string& out_path) {
    if (frame_size < 1)
        throw Unsatisfiable("Unsatisfiable: the frame needs at least one event");
    if (frame_size > max_frame_size) throw FrameTooLarge(frame_size, max_frame_size);
    std::vector<std::string> labels;
    for (int i = 0; i < frame_size; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    const Frame frame(std::move(labels));
    const Cbba cbba = random_cbba(frame, focals, seed);
    const io::CbbaDocument document{frame, {cbba.entries().begin(), cbba.entries().end()},
                                    std::nullopt};
    io::save_cbba_document(out_path, document, io::MassForm::rectangular);
    return 0;
}

inline int cmd_degenerate(const std::string& path, const std::optional<double>& tolerance,
                          std::ostream& out) {
    const io::CbbaDocument document = io::load_cbba_document(path);
    const Cbba cbba =
        Cbba::build(document.frame, document.entries, pick_tolerance(tolerance, document));
    const ClassicalBba classical = cbba.to_classical();

    const BeliefTable bel = gbel_table(cbba);
    const BeliefTable pl = gpl_table(cbba);
    double bel_diff = 0.0;
    double pl_diff = 0.0;
    for (std::uint32_t mask = 0; mask < bel.size(); ++mask) {
        const Proposition a{mask};
        bel_diff = std::max(bel_diff, std::abs(bel[a] - classical.bel(a)));
        pl_diff = std::max(pl_diff, std::abs(pl[a] - classical.pl(a)));
    }
    out << "max belief difference = " << io::format_value(bel_diff) << "\n";
    out << "max plausibility difference = " << io::format_value(pl_diff) << "\n";
    return (bel_diff <= 1e-12 && pl_diff <= 1e-12) ? 0 : 2;
}

} // namespace detail

/// Parses and runs one invocation; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"complex-valued belief assignments: validation, tables, inversion"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<double> tolerance;
    app.add_option("--tolerance", tolerance, "override the sum tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);

    std::string path;
    std::string kind;
    std::string set;
    std::string format = "csv";
    std::string out_path;
    int frame_size = 0;
    int focals = 0;
    std::uint64_t seed = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a document");
    validate->add_option("file", path, "document to check")->required();

    CLI::App* query = app.add_subcommand("query", "evaluate one proposition");
    query->add_option("file", path, "document to load")->required();
    query->add_option("--kind", kind, "bel, pl or com")
        ->required()
        ->check(CLI::IsMember({"bel", "pl", "com"}));
    query->add_option("--set", set, "comma-separated labels ('' for the empty set)")->required();

    CLI::App* table = app.add_subcommand("table", "write the whole-lattice table");
    table->add_option("file", path, "document to load")->required();
    table->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "output file")->required();

    CLI::App* invert = app.add_subcommand("invert", "commitment table from a belief column");
    invert->add_option("table", path, "table file to invert")->required();
    invert->add_option("--out", out_path, "output file")->required();

    CLI::App* random = app.add_subcommand("random", "generate a pseudo-random document");
    random->add_option("--frame-size", frame_size, "number of events")->required();
    random->add_option("--focals", focals, "number of focal elements")->required();
    random->add_option("--seed", seed, "generator seed")->required();
    random->add_option("--out", out_path, "output file")->required();

    CLI::App* degenerate =
        app.add_subcommand("degenerate", "compare against the classical functions");
    degenerate->add_option("file", path, "classical document to load")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(validate)) return detail::cmd_validate(path, tolerance, err);
        if (app.got_subcommand(query)) return detail::cmd_query(path, kind, set, tolerance, out);
        if (app.got_subcommand(table)) return detail::cmd_table(path, format, out_path, tolerance);
        if (app.got_subcommand(invert)) return detail::cmd_invert(path, out_path);
        if (app.got_subcommand(random))
            return detail::cmd_random(frame_size, focals, seed, out_path);
        if (app.got_subcommand(degenerate)) return detail::cmd_degenerate(path, tolerance, out);
        return 1;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const cbel::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cbel::cli
