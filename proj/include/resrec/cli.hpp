#pragma once

// Command-line front end: discover | resistance | verify | oracle.
// Kept in a header (run_cli) so the dispatch logic is unit-testable without
// spawning processes; tools/resrec.cpp is a thin main().

#include "resrec/report.hpp"
#include "resrec/resistance.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace resrec {

struct RunConfig {
    int k = 3;
    std::string part = "denominator";
    int rep_size = 10;
    int max_families = 200;
    unsigned precision = 50;
    int n_lo = 0;
    int n_hi = 0;
    std::optional<int> n_single;
    std::string method = "all";
    std::string format = "json";
    std::string out_path;
};

namespace detail_cli {

inline Part parse_part(const std::string& s) {
    if (s == "numerator") return Part::numerator;
    if (s == "denominator") return Part::denominator;
    throw error("unknown part: " + s);
}

inline int emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << body;
        if (!body.empty() && body.back() != '\n') out << "\n";
        return 0;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw error("cannot open output file: " + cfg.out_path);
    f << body;
    return 0;
}

inline std::string discover_text(const Json& j) {
    std::ostringstream os;
    os << "discover k=" << j["k"] << " part=" << j["part"].get<std::string>() << "\n";
    os << "families: " << j["family_count"] << "\n";
    for (const auto& line : j["equations_text"]) os << "  " << line.get<std::string>() << "\n";
    os << "annihilator (y): " << j["annihilator_y_text"].get<std::string>() << "\n";
    os << "annihilator (X): " << j["annihilator_X_text"].get<std::string>() << "\n";
    os << "minimal polynomial: " << j["minimal_polynomial_text"].get<std::string>() << "\n";
    os << "order: " << j["order"] << "  cutoff: " << j["cutoff"] << "\n";
    return os.str();
}

inline int cmd_discover(const RunConfig& cfg, std::ostream& out) {
    FamilySpec spec{cfg.k, parse_part(cfg.part)};
    PartAnalysis part = analyze_part(spec, cfg.precision, cfg.rep_size, cfg.max_families);

    Json j;
    j["command"] = "discover";
    j["k"] = cfg.k;
    j["part"] = cfg.part;
    j["rep_size"] = cfg.rep_size;
    j["max_families"] = cfg.max_families;
    j["family_count"] = part.system.families.size();
    j["system"] = to_json(part.system);
    j["equations_text"] = to_json(part.system)["text"];
    j["annihilator_y"] = to_json(part.annihilator_y);
    j["annihilator_y_text"] = part.annihilator_y.to_string("y");
    j["annihilator_X"] = to_json(part.annihilator_X);
    j["annihilator_X_text"] = part.annihilator_X.to_string("X");
    j["minimal_polynomial"] = to_json(part.minimal_X);
    j["minimal_polynomial_text"] = part.minimal_X.to_string("X");
    j["order"] = part.rec.order;
    j["cutoff"] = part.rec.cutoff;
    j["index_convention"] = "minor size";
    j["recurrence"] = to_json(part.rec);
    j["binet_form"] = to_json(part.form);
    j["oracle"] = to_json(part.minor_seq);

    if (cfg.format == "text") return emit(cfg, discover_text(j), out);
    return emit(cfg, j.dump(2) + "\n", out);
}

inline int cmd_resistance(const RunConfig& cfg, std::ostream& out) {
    const bool need_pipeline = cfg.method != "exact";
    std::optional<Pipeline> pipeline;
    if (need_pipeline) pipeline.emplace(cfg.k, cfg.precision, cfg.rep_size, cfg.max_families);

    Json rows = Json::array();
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        Json row;
        row["n"] = n;
        std::optional<BigRat> exact;
        if (cfg.method == "exact" || cfg.method == "all") {
            exact = resistance_exact(cfg.k, n);
            row["exact"] = Json{{"value", to_decimal(*exact)}, {"method", "oracle"}};
        }
        if (cfg.method == "recurrence" || cfg.method == "all") {
            BigRat r = pipeline->resistance_recurrence(n);
            row["recurrence"] = Json{{"value", to_decimal(r)}, {"method", "recurrence"}};
            if (exact) row["exact_equals_recurrence"] = (*exact == r);
        }
        if (cfg.method == "binet" || cfg.method == "all") {
            Real b = pipeline->resistance_binet(n);
            row["binet"] = Json{{"value", real_str(b, cfg.precision)}, {"method", "binet"}};
            BigRat ref = exact ? *exact : pipeline->resistance_recurrence(n);
            Real rel = abs(b - Real(ref)) / abs(Real(ref));
            row["binet_rel_err"] = real_str(rel, 8);
        }
        rows.push_back(row);
    }
    Json j;
    j["command"] = "resistance";
    j["k"] = cfg.k;
    j["method"] = cfg.method;
    j["precision"] = cfg.precision;
    j["rows"] = rows;

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "n,exact,recurrence,binet\n";
        for (const auto& row : rows) {
            os << row["n"] << ",";
            if (row.contains("exact")) os << row["exact"]["value"].get<std::string>();
            os << ",";
            if (row.contains("recurrence")) os << row["recurrence"]["value"].get<std::string>();
            os << ",";
            if (row.contains("binet")) os << row["binet"]["value"].get<std::string>();
            os << "\n";
        }
        return emit(cfg, os.str(), out);
    }
    if (cfg.format == "text") {
        std::ostringstream os;
        for (const auto& row : rows) {
            os << "n=" << row["n"];
            if (row.contains("exact")) os << "  exact=" << row["exact"]["value"].get<std::string>();
            if (row.contains("recurrence"))
                os << "  recurrence=" << row["recurrence"]["value"].get<std::string>();
            if (row.contains("binet")) os << "  binet=" << row["binet"]["value"].get<std::string>();
            os << "\n";
        }
        return emit(cfg, os.str(), out);
    }
    return emit(cfg, j.dump(2) + "\n", out);
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Pipeline pipeline(cfg.k, cfg.precision, cfg.rep_size, cfg.max_families);
    ConvergenceReport report = pipeline.verify_conjecture(cfg.n_lo, cfg.n_hi);

    std::string body = (cfg.format == "csv") ? to_csv(report) : to_json(report).dump(2) + "\n";
    if (cfg.format == "text") {
        std::ostringstream os;
        for (const auto& row : report.rows)
            os << "n=" << row.n << "  Delta=" << to_decimal(row.delta)
               << "  err=" << to_decimal(row.err) << "\n";
        body = os.str();
    }
    emit(cfg, body, out);
    out << (report.pass ? "PASS" : "FAIL") << ": limit " << to_decimal(report.reference)
        << ", |identity residual| = " << real_str(report.identity_residual, 10)
        << ", final |Delta-limit| = " << real_str(Real(report.final_error), 10)
        << ", tail rate = " << real_str(report.empirical_tail_rate, 10) << "\n";
    return report.pass ? 0 : 1;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    FamilySpec spec{cfg.k, parse_part(cfg.part)};
    DetSequence seq = oracle_sequence(spec, cfg.n_lo, cfg.n_hi);
    Json j;
    j["command"] = "oracle";
    j["k"] = cfg.k;
    j["part"] = cfg.part;
    j["index_convention"] = "laplacian size";
    j["sequence"] = to_json(seq);

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "n,det\n";
        for (size_t i = 0; i < seq.terms.size(); ++i)
            os << seq.start + static_cast<long>(i) << "," << seq.terms[i].str() << "\n";
        return emit(cfg, os.str(), out);
    }
    if (cfg.format == "text") {
        std::ostringstream os;
        for (size_t i = 0; i < seq.terms.size(); ++i)
            os << "Det(L^" << seq.start + static_cast<long>(i) << ") = " << seq.terms[i].str()
               << "\n";
        return emit(cfg, os.str(), out);
    }
    return emit(cfg, j.dump(2) + "\n", out);
}

}  // namespace detail_cli

/// Full CLI dispatch. Returns the process exit code: 0 on success (and all
/// verify gates green), 1 on runtime failures, 2 on usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("RESREC_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) cfg.precision = static_cast<unsigned>(v);
    }

    CLI::App app{"exact recurrences, Binet forms, and end-node resistance of banded k-tree Laplacians"};
    app.name("resrec");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", cfg.k, "bandwidth of the k-tree family")->check(CLI::PositiveNumber);
        cmd->add_option("--rep-size", cfg.rep_size, "representative member size");
        cmd->add_option("--max-families", cfg.max_families, "registry cap for the expansion");
        cmd->add_option("--precision", cfg.precision, "working decimal digits");
        cmd->add_option("--format", cfg.format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", cfg.out_path, "write the report to this file");
    };

    CLI::App* discover = app.add_subcommand("discover", "run the Laplace expansion procedure");
    add_common(discover);
    discover->add_option("--part", cfg.part, "numerator|denominator")
        ->check(CLI::IsMember({"numerator", "denominator"}));

    CLI::App* resistance = app.add_subcommand("resistance", "exact / recurrence / Binet resistance values");
    add_common(resistance);
    resistance->add_option("--n-lo", cfg.n_lo, "first graph size");
    resistance->add_option("--n-hi", cfg.n_hi, "last graph size");
    resistance->add_option("--n", cfg.n_single, "single graph size");
    resistance->add_option("--method", cfg.method, "exact|recurrence|binet|all")
        ->check(CLI::IsMember({"exact", "recurrence", "binet", "all"}));

    CLI::App* verify = app.add_subcommand("verify", "convergence report for the 1/14 limit");
    add_common(verify);
    verify->add_option("--n-lo", cfg.n_lo, "first graph size (default 10)");
    verify->add_option("--n-hi", cfg.n_hi, "last graph size (default 80)");

    CLI::App* oracle = app.add_subcommand("oracle", "exact determinant sequence of a family part");
    add_common(oracle);
    oracle->add_option("--part", cfg.part, "numerator|denominator")
        ->check(CLI::IsMember({"numerator", "denominator"}));
    oracle->add_option("--n-lo", cfg.n_lo, "first Laplacian size");
    oracle->add_option("--n-hi", cfg.n_hi, "last Laplacian size");

    args.insert(args.begin(), "resrec");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.precision < 20) {
            err << "error: --precision must be at least 20\n";
            return 2;
        }
        if (cfg.n_single) cfg.n_lo = cfg.n_hi = *cfg.n_single;
        if (verify->parsed() && cfg.n_lo == 0 && cfg.n_hi == 0) {
            cfg.n_lo = 10;
            cfg.n_hi = 80;
        }
        if (resistance->parsed() || oracle->parsed() || verify->parsed()) {
            if (cfg.n_lo == 0 && cfg.n_hi == 0) {
                err << "error: empty n range (set --n or --n-lo/--n-hi)\n";
                return 2;
            }
            if (cfg.n_hi < cfg.n_lo) {
                err << "error: empty n range\n";
                return 2;
            }
        }
        if (discover->parsed()) return detail_cli::cmd_discover(cfg, out);
        if (resistance->parsed()) return detail_cli::cmd_resistance(cfg, out);
        if (verify->parsed()) return detail_cli::cmd_verify(cfg, out);
        if (oracle->parsed()) return detail_cli::cmd_oracle(cfg, out);
        err << "error: no command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace resrec
