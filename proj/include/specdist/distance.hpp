#pragma once

// Spectral distance sigma(G1, G2) = sum_i |λ_i(G1) - λ_i(G2)| over
// descending-sorted spectra, plus the case-split closed sums for the pairs
// (P_n, Z_n), (W_n, Z_n), (C_2n, Z_2n) and the interlacing sign patterns
// those sums rest on.
//
// The closed sums only need the positive half of each spectrum: all graphs
// involved are bipartite, so λ_{n+1-k} = -λ_k and the negative half
// contributes the same amount again.

#include "specdist/error.hpp"
#include "specdist/format.hpp"
#include "specdist/graph.hpp"
#include "specdist/spectrum.hpp"
#include "specdist/summation.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specdist {

enum class graph_pair { pz, wz, pw, cz };

inline constexpr graph_pair all_pairs[] = {graph_pair::pz, graph_pair::wz, graph_pair::pw,
                                           graph_pair::cz};

struct pair_members {
    family first;
    family second;
};

inline constexpr pair_members members(graph_pair p) {
    switch (p) {
    case graph_pair::pz: return {family::path, family::z_tree};
    case graph_pair::wz: return {family::w_tree, family::z_tree};
    case graph_pair::pw: return {family::path, family::w_tree};
    case graph_pair::cz: return {family::cycle, family::z_tree};
    }
    return {family::path, family::path};
}

inline constexpr const char* pair_name(graph_pair p) {
    switch (p) {
    case graph_pair::pz: return "pz";
    case graph_pair::wz: return "wz";
    case graph_pair::pw: return "pw";
    case graph_pair::cz: return "cz";
    }
    return "?";
}

inline std::optional<graph_pair> parse_pair(std::string_view s) {
    for (auto p : all_pairs)
        if (s == pair_name(p)) return p;
    return std::nullopt;
}

inline constexpr std::size_t min_order(graph_pair p) {
    const auto m = members(p);
    return std::max(min_order(m.first), min_order(m.second));
}

/// Orders are always full vertex counts; CZ additionally needs n even.
inline void require_order(graph_pair p, std::size_t n) {
    const auto m = members(p);
    require_order(m.first, n);
    require_order(m.second, n);
    if (p == graph_pair::cz && n % 2 != 0)
        throw error(errc::residue_mismatch, "CZ requires an even order (C_2n vs Z_2n)");
}

/// Per-index relation of λ_k(G1) and λ_k(G2).
enum class dominance { first_above, second_above, equal };

/// Differences below this are classified as equalities.
inline constexpr double equality_tolerance = 1e-12;

inline dominance classify(double diff) {
    if (std::abs(diff) < equality_tolerance) return dominance::equal;
    return diff > 0.0 ? dominance::first_above : dominance::second_above;
}

/// Label such as "P_above", "Z_above" or "equal".
inline std::string dominance_label(graph_pair p, dominance d) {
    const auto m = members(p);
    switch (d) {
    case dominance::first_above: return std::string(1, family_letter(m.first)) + "_above";
    case dominance::second_above: return std::string(1, family_letter(m.second)) + "_above";
    case dominance::equal: return "equal";
    }
    return "?";
}

inline double sigma(const spectrum& a, const spectrum& b) {
    if (a.size() != b.size()) throw error(errc::length_mismatch, "spectra differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

struct distance_report {
    graph_pair pair;
    std::size_t n;
    double sigma;
    std::vector<double> diffs; // λ_i(G1) - λ_i(G2)
    std::vector<dominance> pattern;
};

inline distance_report compare(graph_pair p, std::size_t n, const spectrum& first,
                               const spectrum& second) {
    if (first.size() != second.size() || first.size() != n)
        throw error(errc::length_mismatch, "spectra must both have length n");
    distance_report r{p, n, 0.0, {}, {}};
    r.diffs.reserve(n);
    r.pattern.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = first[i] - second[i];
        r.diffs.push_back(d);
        r.pattern.push_back(classify(d));
        r.sigma += std::abs(d);
    }
    return r;
}

inline std::pair<spectrum, spectrum> closed_pair_spectra(graph_pair p, std::size_t n) {
    require_order(p, n);
    const auto m = members(p);
    return {closed_spectrum({m.first, n}), closed_spectrum({m.second, n})};
}

/// Report built from the closed-form spectra of both members.
inline distance_report compare(graph_pair p, std::size_t n) {
    auto [a, b] = closed_pair_spectra(p, n);
    return compare(p, n, a, b);
}

/// sigma of the closed-form spectra, O(n log n).
inline double sigma_direct(graph_pair p, std::size_t n) {
    auto [a, b] = closed_pair_spectra(p, n);
    return sigma(a, b);
}

struct crossover_index {
    std::size_t n;
    std::size_t n_star;
};

/// Index after which the dominance between the paired spectra flips, for
/// even n: n/4 when 4 | n, (n-2)/4 otherwise.
inline crossover_index crossover(std::size_t n) {
    if (n % 2 != 0) throw error(errc::residue_mismatch, "crossover index needs an even order");
    if (n < 4) throw error(errc::order_too_small, "crossover index needs n ≥ 4");
    return {n, n % 4 == 0 ? n / 4 : (n - 2) / 4};
}

namespace detail {

// Index ranges (1-based, inclusive) of the positive half of a PZ or WZ
// comparison: the "upper" member dominates on [1, lead_end], the other one
// on [trail_begin, trail_end], and the listed indices are equalities.
struct case_split {
    std::size_t lead_end;
    std::size_t trail_begin;
    std::size_t trail_end;
    std::vector<std::size_t> equal_at;
};

inline case_split split_for(graph_pair p, std::size_t n) {
    switch (n % 4) {
    case 1: return {(n - 1) / 4, (n + 3) / 4, (n - 1) / 2, {(n + 1) / 2}};
    case 3: return {(n - 3) / 4, (n + 5) / 4, (n - 1) / 2, {(n + 1) / 4, (n + 1) / 2}};
    default: {
        const std::size_t ns = crossover(n).n_star;
        if (p == graph_pair::wz) return {ns, ns + 1, n / 2 - 1, {n / 2}};
        return {ns, ns + 1, n / 2, {}};
    }
    }
}

// λ_k(P_n), λ_k(Z_n), λ_k(W_n) for k on the positive half, halved.
inline double path_cos(std::size_t k, std::size_t n) {
    return std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n + 1));
}
inline double z_cos(std::size_t k, std::size_t n) {
    return std::cos(static_cast<double>(2 * k - 1) * std::numbers::pi /
                    static_cast<double>(2 * n - 2));
}
inline double w_cos(std::size_t k, std::size_t n) {
    return std::cos(static_cast<double>(k - 1) * std::numbers::pi / static_cast<double>(n - 3));
}

// sum_{k=1}^{h-1} (-1)^k cos((2k-1)π/(4h-2))
inline double alternating_cos_sum(std::size_t half, summation mode) {
    accumulator acc(mode);
    for (std::size_t k = 1; k < half; ++k) {
        const double c = std::cos(static_cast<double>(2 * k - 1) * std::numbers::pi /
                                  static_cast<double>(4 * half - 2));
        acc.add(k % 2 == 0 ? c : -c);
    }
    return acc.value();
}

template <class Upper, class Lower>
double split_sum(const case_split& cs, Upper upper, Lower lower, summation mode) {
    accumulator acc(mode);
    for (std::size_t k = 1; k <= cs.lead_end; ++k) acc.add(upper(k) - lower(k));
    for (std::size_t k = cs.trail_begin; k <= cs.trail_end; ++k) acc.add(lower(k) - upper(k));
    return 4.0 * acc.value();
}

} // namespace detail

/// sigma(P_n, Z_n) from the residue-class closed sum. n >= 4.
inline double sigma_closed_pz(std::size_t n, summation mode = summation::plain) {
    require_order(graph_pair::pz, n);
    return detail::split_sum(
        detail::split_for(graph_pair::pz, n), [n](std::size_t k) { return detail::z_cos(k, n); },
        [n](std::size_t k) { return detail::path_cos(k, n); }, mode);
}

/// sigma(W_n, Z_n) from the residue-class closed sum. n >= 6.
inline double sigma_closed_wz(std::size_t n, summation mode = summation::plain) {
    require_order(graph_pair::wz, n);
    return detail::split_sum(
        detail::split_for(graph_pair::wz, n), [n](std::size_t k) { return detail::w_cos(k, n); },
        [n](std::size_t k) { return detail::z_cos(k, n); }, mode);
}

/// sigma(C_2h, Z_2h) = 4 + 4 sum_{k=1}^{h-1} (-1)^k cos((2k-1)π/(4h-2)).
/// Takes the half order h >= 2.
inline double sigma_closed_cz(std::size_t half, summation mode = summation::plain) {
    if (half < 2) throw error(errc::order_too_small, "CZ requires half order ≥ 2");
    return 4.0 + 4.0 * detail::alternating_cos_sum(half, mode);
}

/// Closed-sum sigma for any pair at full order n. PW uses the additivity
/// sigma(P,W) = sigma(P,Z) + sigma(W,Z).
inline double sigma_closed(graph_pair p, std::size_t n, summation mode = summation::plain) {
    require_order(p, n);
    switch (p) {
    case graph_pair::pz: return sigma_closed_pz(n, mode);
    case graph_pair::wz: return sigma_closed_wz(n, mode);
    case graph_pair::pw: return sigma_closed_pz(n, mode) + sigma_closed_wz(n, mode);
    case graph_pair::cz: return sigma_closed_cz(n / 2, mode);
    }
    return 0.0;
}

/// The sign pattern asserted for every index 1..n, indexed from 0.
inline std::vector<dominance> expected_pattern(graph_pair p, std::size_t n) {
    require_order(p, n);
    std::vector<dominance> out(n, dominance::equal);

    if (p == graph_pair::cz) {
        // C above at odd k, Z above at even k; ties at k = n/2, n/2 + 1
        // when n/2 is even.
        for (std::size_t k = 1; k <= n; ++k)
            out[k - 1] = k % 2 == 1 ? dominance::first_above : dominance::second_above;
        if ((n / 2) % 2 == 0) {
            out[n / 2 - 1] = dominance::equal;
            out[n / 2] = dominance::equal;
        }
        return out;
    }

    if (p == graph_pair::pw) {
        // P - W = (P - Z) + (Z - W); both summands share signs index by index.
        const auto pz = expected_pattern(graph_pair::pz, n);
        const auto wz = expected_pattern(graph_pair::wz, n);
        auto sign = [](dominance d) { return d == dominance::first_above ? 1 : d == dominance::equal ? 0 : -1; };
        for (std::size_t i = 0; i < n; ++i) {
            const int s = sign(pz[i]) != 0 ? sign(pz[i]) : -sign(wz[i]);
            out[i] = s > 0 ? dominance::first_above : s < 0 ? dominance::second_above : dominance::equal;
        }
        return out;
    }

    // PZ: Z leads on the first stretch. WZ: W leads.
    const dominance lead = p == graph_pair::pz ? dominance::second_above : dominance::first_above;
    const dominance trail = p == graph_pair::pz ? dominance::first_above : dominance::second_above;
    const auto cs = detail::split_for(p, n);
    for (std::size_t k = 1; k <= cs.lead_end; ++k) out[k - 1] = lead;
    for (std::size_t k = cs.trail_begin; k <= cs.trail_end; ++k) out[k - 1] = trail;
    for (auto k : cs.equal_at) out[k - 1] = dominance::equal;

    // Mirror onto the negative half: diff_{n+1-k} = -diff_k.
    auto flip = [](dominance d) {
        return d == dominance::first_above ? dominance::second_above
             : d == dominance::second_above ? dominance::first_above
                                             : dominance::equal;
    };
    for (std::size_t k = n / 2 + 1 + n % 2; k <= n; ++k) out[k - 1] = flip(out[n - k]);
    return out;
}

struct interlace_report {
    distance_report observed;
    std::vector<dominance> expected;
    bool matches;
    std::optional<std::size_t> first_violation; // 1-based index
};

/// Observed sign pattern of the closed-form spectra against the asserted one.
inline interlace_report interlace_pattern(graph_pair p, std::size_t n) {
    interlace_report r{compare(p, n), expected_pattern(p, n), true, std::nullopt};
    for (std::size_t i = 0; i < n; ++i) {
        if (r.observed.pattern[i] != r.expected[i]) {
            r.matches = false;
            r.first_violation = i + 1;
            break;
        }
    }
    return r;
}

/// sigma recomputed from the positive-half signed differences, doubled by
/// bipartite symmetry. Agrees with report.sigma when the pattern is right.
inline double sigma_from_pattern(const distance_report& r, const std::vector<dominance>& pattern) {
    auto signed_diff = [&](std::size_t i) {
        switch (pattern[i]) {
        case dominance::first_above: return r.diffs[i];
        case dominance::second_above: return -r.diffs[i];
        case dominance::equal: return 0.0;
        }
        return 0.0;
    };
    double half = 0.0;
    for (std::size_t i = 0; i < r.n / 2; ++i) half += signed_diff(i);
    double s = 2.0 * half;
    if (r.n % 2 == 1) s += signed_diff(r.n / 2);
    return s;
}

/// |sigma(P,W) - sigma(P,Z) - sigma(W,Z)| on the closed-form spectra.
inline double check_additivity(std::size_t n) {
    require_order(graph_pair::pw, n);
    const auto p = closed_spectrum({family::path, n});
    const auto z = closed_spectrum({family::z_tree, n});
    const auto w = closed_spectrum({family::w_tree, n});
    return std::abs(sigma(p, w) - sigma(p, z) - sigma(w, z));
}

/// {"pair": ..., "n": ..., "sigma": ..., "diffs": [...], "pattern": [...]},
/// followed by any extra numeric members.
inline void write_report_json(std::ostream& os, const distance_report& r,
                              std::span<const std::pair<std::string, double>> extra = {}) {
    os << "{\"pair\":\"" << pair_name(r.pair) << "\",\"n\":" << r.n
       << ",\"sigma\":" << format_json_real(r.sigma) << ",\"diffs\":[";
    for (std::size_t i = 0; i < r.diffs.size(); ++i)
        os << (i ? "," : "") << format_json_real(r.diffs[i]);
    os << "],\"pattern\":[";
    for (std::size_t i = 0; i < r.pattern.size(); ++i)
        os << (i ? "," : "") << '"' << dominance_label(r.pair, r.pattern[i]) << '"';
    os << ']';
    for (const auto& [key, value] : extra) os << ",\"" << key << "\":" << format_json_real(value);
    os << '}';
}

} // namespace specdist
