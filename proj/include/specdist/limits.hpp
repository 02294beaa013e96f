#pragma once

// Limits of the sigma sequences. Each pair is sampled along one residue
// class mod 4 on a roughly doubling grid, evaluated with the closed sums,
// and extrapolated assuming an error of order 1/n.

#include "specdist/distance.hpp"
#include "specdist/error.hpp"
#include "specdist/format.hpp"
#include "specdist/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace specdist {

/// (8 - 8√2 + 2π)/π ≈ 0.9452, the common limit of sigma(P_n, Z_n) and
/// sigma(W_n, Z_n).
inline double snake_limit() {
    return (8.0 - 8.0 * std::numbers::sqrt2 + 2.0 * std::numbers::pi) / std::numbers::pi;
}

inline double target_constant(graph_pair p) {
    switch (p) {
    case graph_pair::pz:
    case graph_pair::wz: return snake_limit();
    case graph_pair::pw: return 2.0 * snake_limit();
    case graph_pair::cz: return 2.0;
    }
    return 0.0;
}

/// sum_{k=1}^{h-1} (-1)^k cos((2k-1)π/(4h-2)); tends to -1/2.
inline double alternating_sum(std::size_t half, summation mode = summation::plain) {
    if (half < 2) throw error(errc::order_too_small, "alternating sum requires n ≥ 2");
    return detail::alternating_cos_sum(half, mode);
}

struct sample {
    std::size_t n;
    double value;
};

/// First-order Richardson step on the last two samples, assuming
/// v_n ≈ L + c/n: L ≈ (n2 v2 - n1 v1) / (n2 - n1), which is 2 v_2n - v_n on an
/// exact doubling. Grids whose last step is not roughly 2x fall back to the
/// last value.
inline double richardson_extrapolate(std::span<const sample> samples) {
    if (samples.size() < 3)
        throw error(errc::insufficient_samples, "extrapolation needs at least 3 samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].n <= samples[i - 1].n)
            throw error(errc::invalid_grid, "sample orders must be strictly increasing");
    const auto& lo = samples[samples.size() - 2];
    const auto& hi = samples.back();
    const double n1 = static_cast<double>(lo.n);
    const double n2 = static_cast<double>(hi.n);
    const double ratio = n2 / n1;
    if (ratio < 1.5 || ratio > 2.5) return hi.value;
    return (n2 * hi.value - n1 * lo.value) / (n2 - n1);
}

/// Roughly doubling grid inside one residue class: starts at the smallest
/// valid order n ≡ residue (mod 4), then steps to the largest m ≤ 2n in the
/// class. CZ ignores the residue and uses 4, 8, 16, ...
inline std::vector<std::size_t> doubling_grid(graph_pair p, std::optional<int> residue,
                                              std::size_t n_max) {
    std::vector<std::size_t> grid;
    if (p == graph_pair::cz) {
        for (std::size_t n = 4; n <= n_max; n *= 2) grid.push_back(n);
        return grid;
    }
    if (!residue || *residue < 0 || *residue > 3)
        throw error(errc::residue_mismatch, "residue must be 0, 1, 2 or 3");
    const auto r = static_cast<std::size_t>(*residue);
    std::size_t n = min_order(p);
    while (n % 4 != r) ++n;
    while (n <= n_max) {
        grid.push_back(n);
        std::size_t m = 2 * n;
        while (m % 4 != r) --m;
        n = m;
    }
    return grid;
}

struct limit_estimate {
    graph_pair pair;
    std::optional<int> residue; // none for CZ
    std::vector<sample> samples;
    double extrapolated;
    double target;
    double abs_error;
};

struct scan_options {
    summation mode = summation::plain;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Evaluates the closed-form sigma at every n (concurrently) and
/// extrapolates. Samples come back ordered by n.
inline limit_estimate sequence_scan(graph_pair p, std::optional<int> residue,
                                    std::span<const std::size_t> n_values,
                                    const scan_options& opts = {}) {
    if (p == graph_pair::cz) {
        residue.reset();
    } else if (!residue || *residue < 0 || *residue > 3) {
        throw error(errc::residue_mismatch, "residue must be 0, 1, 2 or 3");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const std::size_t n = n_values[i];
        require_order(p, n);
        if (residue && n % 4 != static_cast<std::size_t>(*residue))
            throw error(errc::residue_mismatch,
                        "n = " + std::to_string(n) + " is not ≡ " + std::to_string(*residue) +
                            " (mod 4)");
        if (i > 0 && n <= n_values[i - 1])
            throw error(errc::invalid_grid, "scan orders must be strictly increasing");
    }

    std::vector<sample> samples(n_values.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n_values.size(); i = next++)
            samples[i] = {n_values[i], sigma_closed(p, n_values[i], opts.mode)};
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_values.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    limit_estimate est{p, residue, std::move(samples), 0.0, target_constant(p), 0.0};
    est.extrapolated = richardson_extrapolate(est.samples);
    est.abs_error = std::abs(est.extrapolated - est.target);
    return est;
}

inline limit_estimate sequence_scan(graph_pair p, std::optional<int> residue, std::size_t n_max,
                                    const scan_options& opts = {}) {
    const auto grid = doubling_grid(p, residue, n_max);
    return sequence_scan(p, residue, grid, opts);
}

/// Columns pair,residue,n,sigma,target,abs_error; the last row carries the
/// extrapolated limit with n = inf. CZ rows leave the residue empty.
inline void write_scan_csv(std::ostream& os, const limit_estimate& est) {
    const std::string residue = est.residue ? std::to_string(*est.residue) : std::string();
    const std::string target = format_real(est.target);
    os << "pair,residue,n,sigma,target,abs_error\n";
    for (const auto& s : est.samples) {
        os << pair_name(est.pair) << ',' << residue << ',' << s.n << ',' << format_real(s.value)
           << ',' << target << ',' << format_real(std::abs(s.value - est.target)) << '\n';
    }
    os << pair_name(est.pair) << ',' << residue << ",inf," << format_real(est.extrapolated) << ','
       << target << ',' << format_real(est.abs_error) << '\n';
}

inline void write_estimate_json(std::ostream& os, const limit_estimate& est) {
    os << "{\"pair\":\"" << pair_name(est.pair) << "\",\"residue\":";
    if (est.residue)
        os << *est.residue;
    else
        os << "null";
    os << ",\"samples\":[";
    for (std::size_t i = 0; i < est.samples.size(); ++i) {
        os << (i ? "," : "") << "{\"n\":" << est.samples[i].n
           << ",\"sigma\":" << format_json_real(est.samples[i].value) << '}';
    }
    os << "],\"extrapolated\":" << format_json_real(est.extrapolated)
       << ",\"target\":" << format_json_real(est.target)
       << ",\"abs_error\":" << format_json_real(est.abs_error) << '}';
}

} // namespace specdist
