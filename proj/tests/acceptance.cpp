// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and are not configurable.

#include "specdist/specdist.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace specdist;

namespace {

struct outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "FIRST FAILURE: " << what << "; ";
        pass = pass && ok;
    }
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// 1. sigma(C_2n, Z_2n) -> 2.
outcome cycle_snake_limit() {
    outcome o;
    const auto t0 = clock_type::now();
    const double at_max = sigma_closed_cz(100000);
    const double err = std::abs(at_max - 2.0);
    o.require(err < 1e-3, "|sigma(C_200000, Z_200000) - 2| < 1e-3");
    const auto est = sequence_scan(graph_pair::cz, std::nullopt, 200000);
    o.require(est.abs_error < 1e-5, "Richardson estimate within 1e-5 of 2");
    const double t = seconds_since(t0);
    o.require(t < 1.0, "runtime < 1 s");
    o.detail << "err(2n=2e5)=" << fmt(err) << " extrapolated err=" << fmt(est.abs_error)
             << " time=" << fmt(t) << "s";
    return o;
}

// 2. sigma(P_n, Z_n) and sigma(W_n, Z_n) -> (8 - 8√2 + 2π)/π in every residue class.
outcome snake_limits() {
    outcome o;
    const auto t0 = clock_type::now();
    const double target = (8.0 - 8.0 * std::numbers::sqrt2 + 2.0 * std::numbers::pi) / std::numbers::pi;
    double worst_point = 0.0, worst_spread = 0.0;
    for (auto p : {graph_pair::pz, graph_pair::wz}) {
        std::vector<double> limits;
        for (int r = 0; r < 4; ++r) {
            const std::size_t n = 100000 + static_cast<std::size_t>(r);
            const double err = std::abs(sigma_closed(p, n) - target);
            worst_point = std::max(worst_point, err);
            o.require(err < 1e-3, std::string(pair_name(p)) + " n=" + std::to_string(n) + " within 1e-3");
            limits.push_back(sequence_scan(p, r, 100000).extrapolated);
        }
        for (double a : limits)
            for (double b : limits) worst_spread = std::max(worst_spread, std::abs(a - b));
    }
    o.require(worst_spread < 1e-4, "residue-class extrapolations agree within 1e-4");
    const double t = seconds_since(t0);
    o.require(t < 5.0, "runtime < 5 s");
    o.detail << "max point err=" << fmt(worst_point) << " max spread=" << fmt(worst_spread)
             << " time=" << fmt(t) << "s";
    return o;
}

// 3. sigma(P_n, W_n) -> twice the snake limit; additivity holds pointwise.
outcome double_snake_path() {
    outcome o;
    const double target = 2.0 * snake_limit();
    double worst_extrap = 0.0;
    for (int r = 0; r < 4; ++r) {
        const auto est = sequence_scan(graph_pair::pw, r, 100000);
        const double err = std::abs(est.extrapolated - target);
        worst_extrap = std::max(worst_extrap, err);
        o.require(err < 2e-3, "PW residue " + std::to_string(r) + " within 2e-3");
    }
    double worst_residual = 0.0;
    for (std::size_t n = 6; n <= 2000; ++n) {
        const double res = check_additivity(n);
        worst_residual = std::max(worst_residual, res);
        o.require(res < 1e-9, "additivity residual at n=" + std::to_string(n));
    }
    o.detail << "max extrapolation err=" << fmt(worst_extrap)
             << " max additivity residual=" << fmt(worst_residual);
    return o;
}

// 4. Closed forms against the Jacobi eigensolver.
outcome oracle_equivalence() {
    outcome o;
    double worst_dev = 0.0, worst_trace = 0.0, worst_sq = 0.0;
    std::size_t count = 0;
    for (auto f : all_families) {
        for (std::size_t n = min_order(f); n <= 200; ++n) {
            const auto g = build({f, n});
            const auto closed = closed_spectrum({f, n});
            const auto numeric = numeric_spectrum(g);
            const double dev = spectrum_deviation(closed, numeric);
            const double edges2 = 2.0 * static_cast<double>(g.size());
            const double tr = std::max(std::abs(trace(closed)), std::abs(trace(numeric)));
            const double sq = std::max(std::abs(sum_of_squares(closed) - edges2),
                                       std::abs(sum_of_squares(numeric) - edges2));
            worst_dev = std::max(worst_dev, dev);
            worst_trace = std::max(worst_trace, tr);
            worst_sq = std::max(worst_sq, sq);
            const std::string id = std::string(1, family_letter(f)) + "_" + std::to_string(n);
            o.require(dev < 1e-8, id + " deviation");
            o.require(tr < 1e-8, id + " trace");
            o.require(sq < 1e-8, id + " sum of squares");
            ++count;
        }
    }
    o.detail << count << " spectra, max deviation=" << fmt(worst_dev) << " max |trace|="
             << fmt(worst_trace) << " max |Σλ²-2|E||=" << fmt(worst_sq);
    return o;
}

// 5. Interlacing sign patterns.
outcome interlacing() {
    outcome o;
    std::size_t count = 0;
    for (auto p : {graph_pair::pz, graph_pair::wz}) {
        for (std::size_t n = min_order(p); n <= 2000; ++n) {
            const auto r = interlace_pattern(p, n);
            o.require(r.matches, std::string(pair_name(p)) + " n=" + std::to_string(n) +
                                     (r.first_violation ? " k=" + std::to_string(*r.first_violation) : ""));
            ++count;
        }
    }
    for (std::size_t half = 2; half <= 1000; ++half) {
        const auto r = interlace_pattern(graph_pair::cz, 2 * half);
        o.require(r.matches, "cz 2n=" + std::to_string(2 * half));
        ++count;
    }
    o.detail << count << " patterns checked";
    return o;
}

// 6. Case-split closed sums against the direct sigma.
outcome closed_vs_direct() {
    outcome o;
    double worst = 0.0;
    for (auto p : {graph_pair::pz, graph_pair::wz, graph_pair::cz}) {
        for (std::size_t n = min_order(p); n <= 2000; ++n) {
            if (p == graph_pair::cz && n % 2) continue;
            const double res = std::abs(sigma_closed(p, n) - sigma_direct(p, n));
            worst = std::max(worst, res);
            o.require(res < 1e-9, std::string(pair_name(p)) + " n=" + std::to_string(n));
        }
    }
    o.detail << "max residual=" << fmt(worst);
    return o;
}

// 7. Alternating cosine sum -> -1/2 at first order.
outcome alternating_sum_limit() {
    outcome o;
    const double e1 = std::abs(alternating_sum(100000) + 0.5);
    const double e2 = std::abs(alternating_sum(200000) + 0.5);
    const double ratio = e2 / e1;
    o.require(e1 < 1e-3, "alternating_sum(1e5) within 1e-3 of -1/2");
    o.require(ratio >= 0.3 && ratio <= 0.7, "error ratio under doubling in [0.3, 0.7]");
    o.detail << "err=" << fmt(e1) << " ratio=" << fmt(ratio);
    return o;
}

// 8. Exact spot values.
outcome spot_values() {
    outcome o;
    const double cz4 = 4.0 - 2.0 * std::sqrt(3.0);
    const double pz4 = 4.0 * (std::cos(std::numbers::pi / 6) - std::cos(std::numbers::pi / 5) +
                              std::cos(2 * std::numbers::pi / 5));
    const double errs[] = {
        std::abs(sigma_direct(graph_pair::cz, 4) - cz4),
        std::abs(sigma_closed_cz(2) - cz4),
        std::abs(sigma_direct(graph_pair::pz, 4) - pz4),
        std::abs(sigma_closed_pz(4) - pz4),
    };
    double worst = 0.0;
    for (double e : errs) {
        worst = std::max(worst, e);
        o.require(e < 1e-12, "spot value within 1e-12");
    }
    o.detail << "max err=" << fmt(worst);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
        {"1 cycle-snake limit", cycle_snake_limit},
        {"2 snake limits per residue class", snake_limits},
        {"3 double-snake/path limit and additivity", double_snake_path},
        {"4 eigensolver oracle equivalence", oracle_equivalence},
        {"5 interlacing sign patterns", interlacing},
        {"6 closed sums vs direct sigma", closed_vs_direct},
        {"7 alternating sum identity", alternating_sum_limit},
        {"8 exact spot values", spot_values},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.str().c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
