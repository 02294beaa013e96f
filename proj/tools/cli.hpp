#pragma once

// Command-line front end: spectrum, dist, verify, scan.
//
// Exit codes: 0 success, 1 a check or tolerance failed, 2 invalid arguments,
// 3 internal inconsistency between the direct and closed-form routes.

#include "specdist/specdist.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace specdist::cli {

enum exit_code : int { ok = 0, check_failed = 1, bad_arguments = 2, inconsistent = 3 };

struct order_range {
    std::size_t first;
    std::size_t last;
};

/// "a..b" (inclusive) or a single order "n".
inline std::optional<order_range> parse_range(const std::string& text) {
    auto to_size = [](const std::string& s) -> std::optional<std::size_t> {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        try {
            return static_cast<std::size_t>(std::stoull(s));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto n = to_size(text);
        if (!n) return std::nullopt;
        return order_range{*n, *n};
    }
    auto a = to_size(text.substr(0, dots));
    auto b = to_size(text.substr(dots + 2));
    if (!a || !b || *a > *b) return std::nullopt;
    return order_range{*a, *b};
}

/// Acceptance tolerance for scan: --tol, else SPECTRA_TOL, else the default
/// for the pair (2e-3 for PW, 1e-3 otherwise).
inline double scan_tolerance(graph_pair p, std::optional<double> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SPECTRA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
    }
    return p == graph_pair::pw ? 2e-3 : 1e-3;
}

namespace detail {

struct spectrum_args {
    std::string family;
    std::size_t n = 0;
    std::string source = "closed";
    std::string format = "text";
    std::string out;
    std::string graph_file;
    std::string export_graph;
};

struct dist_args {
    std::string pair;
    std::size_t n = 0;
    std::string mode = "direct";
    std::string format = "text";
};

struct verify_args {
    std::string check;
    std::string pair = "pz";
    std::string family;
    std::string range;
    std::string graph_file;
};

struct scan_args {
    std::string pair;
    std::optional<int> residue;
    std::size_t n_max = 100000;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    bool compensated = false;
    unsigned threads = 0;
};

class output {
public:
    output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw error(errc::parse_error, "cannot open output file " + path);
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

inline graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open graph file " + path);
    return read_edge_list(in);
}

inline void print_values(std::ostream& os, const spectrum& s) {
    for (double x : s) os << format_real(x) << '\n';
}

inline void print_json_array(std::ostream& os, const spectrum& s) {
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << format_json_real(s[i]);
    os << ']';
}

inline int run_spectrum(const spectrum_args& a, std::ostream& out, std::ostream& err) {
    std::optional<family> fam;
    if (!a.family.empty()) {
        fam = parse_family(a.family);
        if (!fam) {
            err << "unknown family '" << a.family << "' (expected p, c, z or w)\n";
            return bad_arguments;
        }
    }

    std::optional<spectrum> closed, numeric;
    std::string label;
    if (!a.graph_file.empty()) {
        // Imported graphs only go through the eigensolver.
        if (a.source == "closed") {
            err << "--graph-file needs --source numeric or both\n";
            return bad_arguments;
        }
        const graph g = load_graph(a.graph_file);
        numeric = numeric_spectrum(g);
        label = a.graph_file;
        if (a.source == "both") {
            if (!fam) {
                err << "--source both with --graph-file needs --family to compare against\n";
                return bad_arguments;
            }
            closed = closed_spectrum({*fam, g.order()});
        }
    } else {
        if (!fam) {
            err << "--family is required\n";
            return bad_arguments;
        }
        const family_spec spec{*fam, a.n};
        require_order(spec.kind, spec.n);
        label = std::string(1, family_letter(spec.kind)) + "_" + std::to_string(spec.n);
        if (a.source != "numeric") closed = closed_spectrum(spec);
        if (a.source != "closed") numeric = numeric_spectrum(build(spec));
        if (!a.export_graph.empty()) {
            std::ofstream g(a.export_graph);
            if (!g) throw error(errc::parse_error, "cannot open " + a.export_graph);
            write_edge_list(g, build(spec));
        }
    }

    output sink(a.out, out);
    std::ostream& os = sink.stream();
    if (closed && numeric) {
        const double dev = spectrum_deviation(*closed, *numeric);
        if (a.format == "csv") {
            os << "index,closed,numeric\n";
            for (std::size_t i = 0; i < closed->size(); ++i)
                os << (i + 1) << ',' << format_real((*closed)[i]) << ','
                   << format_real((*numeric)[i]) << '\n';
        } else if (a.format == "json") {
            os << "{\"graph\":\"" << label << "\",\"closed\":";
            print_json_array(os, *closed);
            os << ",\"numeric\":";
            print_json_array(os, *numeric);
            os << ",\"deviation\":" << format_json_real(dev) << "}\n";
        } else {
            os << "# closed " << label << '\n';
            print_values(os, *closed);
            os << "# numeric " << label << '\n';
            print_values(os, *numeric);
            os << "deviation " << format_real(dev) << '\n';
        }
        return ok;
    }

    const spectrum& s = closed ? *closed : *numeric;
    if (a.format == "csv") {
        write_spectrum_csv(os, s);
    } else if (a.format == "json") {
        os << "{\"graph\":\"" << label << "\",\"eigenvalues\":";
        print_json_array(os, s);
        os << "}\n";
    } else {
        print_values(os, s);
    }
    return ok;
}

inline int run_dist(const dist_args& a, std::ostream& out, std::ostream& err) {
    const auto pair = parse_pair(a.pair);
    if (!pair) {
        err << "unknown pair '" << a.pair << "' (expected pz, wz, pw or cz)\n";
        return bad_arguments;
    }
    require_order(*pair, a.n);

    auto report = compare(*pair, a.n);
    std::vector<std::pair<std::string, double>> extra;
    int status = ok;
    if (a.mode == "closed") {
        report.sigma = sigma_closed(*pair, a.n);
    } else if (a.mode == "both") {
        const double closed = sigma_closed(*pair, a.n);
        const double residual = std::abs(report.sigma - closed);
        extra = {{"sigma_closed", closed}, {"residual", residual}};
        if (residual > 1e-9) {
            err << "direct and closed-form sigma disagree: residual " << format_real(residual) << '\n';
            status = inconsistent;
        }
    }

    if (a.format == "json") {
        write_report_json(out, report, extra);
        out << '\n';
    } else {
        out << "pair " << pair_name(*pair) << "\nn " << a.n << "\nsigma " << format_real(report.sigma)
            << '\n';
        for (const auto& [key, value] : extra) out << key << ' ' << format_real(value) << '\n';
        out << "pattern";
        for (auto d : report.pattern) out << ' ' << dominance_label(*pair, d);
        out << '\n';
    }
    return status;
}

inline int verify_interlacing(graph_pair p, order_range r, std::ostream& out, std::ostream& err) {
    std::size_t checked = 0;
    for (std::size_t n = std::max(r.first, min_order(p)); n <= r.last; ++n) {
        if (p == graph_pair::cz && n % 2 != 0) continue;
        const auto rep = interlace_pattern(p, n);
        if (!rep.matches) {
            const auto k = *rep.first_violation;
            err << "interlacing violated: pair " << pair_name(p) << " n " << n << " index " << k
                << " expected " << dominance_label(p, rep.expected[k - 1]) << " observed "
                << dominance_label(p, rep.observed.pattern[k - 1]) << " (diff "
                << format_real(rep.observed.diffs[k - 1]) << ")\n";
            return check_failed;
        }
        ++checked;
    }
    out << "interlacing " << pair_name(p) << ": " << checked << " orders pass\n";
    return ok;
}

inline int verify_additivity(order_range r, std::ostream& out, std::ostream& err) {
    double worst = 0.0;
    std::size_t checked = 0;
    for (std::size_t n = std::max<std::size_t>(r.first, 6); n <= r.last; ++n) {
        const double res = check_additivity(n);
        worst = std::max(worst, res);
        if (res >= 1e-9) {
            err << "additivity violated at n " << n << ": residual " << format_real(res) << '\n';
            return check_failed;
        }
        ++checked;
    }
    out << "additivity: " << checked << " orders pass, max residual " << format_real(worst) << '\n';
    return ok;
}

inline std::vector<family> selected_families(const std::string& name) {
    if (name.empty()) return {std::begin(all_families), std::end(all_families)};
    const auto f = parse_family(name);
    if (!f) throw error(errc::parse_error, "unknown family '" + name + "'");
    return {*f};
}

inline int verify_oracle(const verify_args& a, order_range r, std::ostream& out, std::ostream& err) {
    constexpr double tol = 1e-8;
    if (!a.graph_file.empty()) {
        const auto f = parse_family(a.family);
        if (!f) {
            err << "--graph-file needs --family to compare against\n";
            return bad_arguments;
        }
        const graph g = load_graph(a.graph_file);
        const double dev = spectrum_deviation(closed_spectrum({*f, g.order()}), numeric_spectrum(g));
        if (dev >= tol) {
            err << "oracle mismatch for " << a.graph_file << ": deviation " << format_real(dev) << '\n';
            return check_failed;
        }
        out << "oracle " << a.graph_file << ": deviation " << format_real(dev) << '\n';
        return ok;
    }
    double worst = 0.0;
    std::size_t checked = 0;
    for (auto f : selected_families(a.family)) {
        for (std::size_t n = std::max(r.first, min_order(f)); n <= r.last; ++n) {
            const double dev =
                spectrum_deviation(closed_spectrum({f, n}), numeric_spectrum(build({f, n})));
            worst = std::max(worst, dev);
            if (dev >= tol) {
                err << "oracle mismatch: " << family_letter(f) << "_" << n << " deviation "
                    << format_real(dev) << '\n';
                return check_failed;
            }
            ++checked;
        }
    }
    out << "oracle: " << checked << " spectra pass, max deviation " << format_real(worst) << '\n';
    return ok;
}

inline int verify_symmetry(const verify_args& a, order_range r, std::ostream& out,
                           std::ostream& err) {
    constexpr double tol = 1e-10;
    const bool explicit_family = !a.family.empty();
    std::size_t checked = 0;
    for (auto f : selected_families(a.family)) {
        for (std::size_t n = std::max(r.first, min_order(f)); n <= r.last; ++n) {
            // Odd cycles are not bipartite; only checked when asked for.
            if (f == family::cycle && n % 2 != 0 && !explicit_family) continue;
            const double defect = symmetry_defect(closed_spectrum({f, n}));
            if (defect >= tol || !is_bipartite(build({f, n}))) {
                err << "bipartite symmetry fails for " << family_letter(f) << "_" << n
                    << ": defect " << format_real(defect) << '\n';
                return check_failed;
            }
            ++checked;
        }
    }
    out << "bipartite-symmetry: " << checked << " spectra pass\n";
    return ok;
}

inline int run_verify(const verify_args& a, std::ostream& out, std::ostream& err) {
    const auto r = parse_range(a.range);
    if (!r) {
        err << "invalid range '" << a.range << "' (expected a..b)\n";
        return bad_arguments;
    }
    if (a.check == "interlacing") {
        const auto p = parse_pair(a.pair);
        if (!p) {
            err << "unknown pair '" << a.pair << "'\n";
            return bad_arguments;
        }
        if (r->last < min_order(*p)) {
            err << "range ends below the minimum order " << min_order(*p) << '\n';
            return bad_arguments;
        }
        return verify_interlacing(*p, *r, out, err);
    }
    if (a.check == "additivity") {
        if (r->last < 6) {
            err << "additivity needs n ≥ 6\n";
            return bad_arguments;
        }
        return verify_additivity(*r, out, err);
    }
    if (a.check == "oracle") return verify_oracle(a, *r, out, err);
    if (a.check == "bipartite-symmetry") return verify_symmetry(a, *r, out, err);
    err << "unknown check '" << a.check << "'\n";
    return bad_arguments;
}

inline int run_scan(const scan_args& a, std::ostream& out, std::ostream& err) {
    const auto pair = parse_pair(a.pair);
    if (!pair) {
        err << "unknown pair '" << a.pair << "'\n";
        return bad_arguments;
    }
    if (*pair != graph_pair::cz && !a.residue) {
        err << "--residue is required for " << pair_name(*pair) << '\n';
        return bad_arguments;
    }
    scan_options opts;
    opts.mode = a.compensated ? summation::compensated : summation::plain;
    opts.threads = a.threads;
    const auto est = sequence_scan(*pair, a.residue, a.n_max, opts);

    output sink(a.out, out);
    if (a.format == "json") {
        write_estimate_json(sink.stream(), est);
        sink.stream() << '\n';
    } else {
        write_scan_csv(sink.stream(), est);
    }

    const double tol = scan_tolerance(*pair, a.tol);
    if (!(est.abs_error < tol)) {
        err << "tolerance exceeded: |" << format_real(est.extrapolated) << " - "
            << format_real(est.target) << "| = " << format_real(est.abs_error) << " ≥ "
            << format_real(tol) << '\n';
        return check_failed;
    }
    return ok;
}

} // namespace detail

/// Parses argv and dispatches to one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"Spectral distances between paths, cycles and snake trees"};
    app.require_subcommand(1);

    detail::spectrum_args sa;
    auto* spec_cmd = app.add_subcommand("spectrum", "Print the adjacency spectrum of a family member");
    spec_cmd->add_option("--family", sa.family, "p, c, z or w");
    spec_cmd->add_option("--n", sa.n, "Order (number of vertices)");
    spec_cmd->add_option("--source", sa.source, "closed, numeric or both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}))
        ->capture_default_str();
    spec_cmd->add_option("--format", sa.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    spec_cmd->add_option("--out", sa.out, "Write to this file instead of stdout");
    spec_cmd->add_option("--graph-file", sa.graph_file, "Edge-list graph for the eigensolver");
    spec_cmd->add_option("--export-graph", sa.export_graph, "Also write the graph as an edge list");

    detail::dist_args da;
    auto* dist_cmd = app.add_subcommand("dist", "Spectral distance of a pair at order n");
    dist_cmd->add_option("--pair", da.pair, "pz, wz, pw or cz")->required();
    dist_cmd->add_option("--n", da.n, "Order (for cz, the even order 2h)")->required();
    dist_cmd->add_option("--mode", da.mode, "direct, closed or both")
        ->check(CLI::IsMember({"direct", "closed", "both"}))
        ->capture_default_str();
    dist_cmd->add_option("--format", da.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    detail::verify_args va;
    auto* verify_cmd = app.add_subcommand("verify", "Check interlacing, additivity, oracle or symmetry");
    verify_cmd->add_option("--check", va.check, "interlacing, additivity, oracle or bipartite-symmetry")
        ->required();
    verify_cmd->add_option("--pair", va.pair, "Pair for interlacing")->capture_default_str();
    verify_cmd->add_option("--family", va.family, "Restrict oracle/symmetry to one family");
    verify_cmd->add_option("--n", va.range, "Inclusive order range a..b")->required();
    verify_cmd->add_option("--graph-file", va.graph_file, "Edge-list graph for the oracle check");

    detail::scan_args ca;
    auto* scan_cmd = app.add_subcommand("scan", "Scan sigma along a residue class and extrapolate");
    scan_cmd->add_option("--pair", ca.pair, "pz, wz, pw or cz")->required();
    scan_cmd->add_option("--residue", ca.residue, "n mod 4 (ignored for cz)")->check(CLI::Range(0, 3));
    scan_cmd->add_option("--n-max", ca.n_max, "Largest order on the doubling grid")
        ->capture_default_str();
    scan_cmd->add_option("--format", ca.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scan_cmd->add_option("--out", ca.out, "Write to this file instead of stdout");
    scan_cmd->add_option("--tol", ca.tol,
                         "Acceptance tolerance (default 1e-3, 2e-3 for pw; env SPECTRA_TOL)");
    scan_cmd->add_flag("--compensated", ca.compensated, "Use compensated summation");
    scan_cmd->add_option("--threads", ca.threads, "Worker threads (0 = hardware)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return bad_arguments;
    }

    try {
        if (spec_cmd->parsed()) return detail::run_spectrum(sa, out, err);
        if (dist_cmd->parsed()) return detail::run_dist(da, out, err);
        if (verify_cmd->parsed()) return detail::run_verify(va, out, err);
        if (scan_cmd->parsed()) return detail::run_scan(ca, out, err);
    } catch (const error& e) {
        err << e.what() << '\n';
        return e.code() == errc::no_convergence ? check_failed : bad_arguments;
    }
    return bad_arguments;
}

} // namespace specdist::cli
