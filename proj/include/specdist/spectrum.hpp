#pragma once

// Adjacency spectra computed two independent ways: the closed cosine forms
// for the four families, and a cyclic Jacobi eigensolver on the dense
// adjacency matrix. The two are cross-checked with spectrum_deviation.

#include "specdist/error.hpp"
#include "specdist/format.hpp"
#include "specdist/graph.hpp"
#include "specdist/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace specdist {

/// Eigenvalues sorted descending. Multiplicities are kept as repeated entries.
class spectrum {
public:
    spectrum() = default;
    explicit spectrum(std::vector<double> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end(), std::greater<>{});
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

namespace detail {

// 2cos(num*pi/den), with the argument formed as (integer*pi)/denominator.
inline double two_cos(long long num, long long den) {
    return 2.0 * std::cos(static_cast<double>(num) * std::numbers::pi / static_cast<double>(den));
}

} // namespace detail

inline spectrum closed_spectrum(const family_spec& spec) {
    require_order(spec.kind, spec.n);
    const auto n = static_cast<long long>(spec.n);
    std::vector<double> v;
    v.reserve(spec.n);
    switch (spec.kind) {
    case family::path:
        for (long long k = 1; k <= n; ++k) v.push_back(detail::two_cos(k, n + 1));
        break;
    case family::cycle:
        for (long long k = 1; k <= n; ++k) v.push_back(detail::two_cos(2 * k, n));
        break;
    case family::z_tree:
        v.push_back(0.0);
        for (long long k = 1; k <= n - 1; ++k) v.push_back(detail::two_cos(2 * k - 1, 2 * n - 2));
        break;
    case family::w_tree:
        v.insert(v.end(), {2.0, 0.0, 0.0, -2.0});
        for (long long k = 1; k <= n - 4; ++k) v.push_back(detail::two_cos(k, n - 3));
        break;
    }
    return spectrum(std::move(v));
}

struct jacobi_options {
    /// Converged once the off-diagonal Frobenius norm drops below tolerance * n.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline spectrum numeric_spectrum(square_matrix a, const jacobi_options& opts = {}) {
    const std::size_t n = a.rows();
    if (n == 0) throw error(errc::invalid_graph, "empty matrix");
    if (!a.is_symmetric()) throw error(errc::non_symmetric_input, "matrix is not symmetric");

    const double threshold = opts.tolerance * static_cast<double>(n);
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    bool converged = false;
    for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
        if (off_norm() < threshold) {
            converged = true;
            break;
        }
        if (sweep == opts.max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                // Smaller root of t^2 + 2 theta t - 1 = 0, |rotation angle| <= pi/4.
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double g = a(r, p);
                    const double h = a(r, q);
                    const double rp = g - s * (h + g * tau);
                    const double rq = h + s * (g - h * tau);
                    a(r, p) = rp;
                    a(p, r) = rp;
                    a(r, q) = rq;
                    a(q, r) = rq;
                }
            }
        }
    }
    if (!converged)
        throw error(errc::no_convergence, "Jacobi iteration did not converge within " +
                                              std::to_string(opts.max_sweeps) + " sweeps");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    return spectrum(std::move(eig));
}

inline spectrum numeric_spectrum(const graph& g, const jacobi_options& opts = {}) {
    return numeric_spectrum(adjacency_matrix(g), opts);
}

/// Sup norm of the difference of two sorted spectra.
inline double spectrum_deviation(const spectrum& a, const spectrum& b) {
    if (a.size() != b.size()) throw error(errc::length_mismatch, "spectra differ in length");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

/// Largest |λ_i + λ_{n+1-i}|; zero for bipartite graphs.
inline double symmetry_defect(const spectrum& s) {
    double d = 0.0;
    for (std::size_t i = 0, j = s.size(); i < s.size(); ++i) d = std::max(d, std::abs(s[i] + s[--j]));
    return d;
}

inline double trace(const spectrum& s) {
    double t = 0.0;
    for (double x : s) t += x;
    return t;
}

inline double sum_of_squares(const spectrum& s) {
    double t = 0.0;
    for (double x : s) t += x * x;
    return t;
}

/// CSV with header "index,eigenvalue"; indices start at 1.
inline void write_spectrum_csv(std::ostream& os, const spectrum& s) {
    os << "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i + 1) << ',' << format_real(s[i]) << '\n';
}

} // namespace specdist
