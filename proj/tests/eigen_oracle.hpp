#pragma once

// Test-only reference route: eigenvalues from Eigen's self-adjoint solver on
// an adjacency matrix assembled here from the edge list. Shares no code with
// the closed forms or the Jacobi solver under test.

#include "specdist/graph.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline std::vector<double> eigenvalues(const specdist::graph& g) {
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
        a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(v.begin(), v.end(), std::greater<>{});
    return v;
}

inline double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

inline double sigma(const specdist::graph& a, const specdist::graph& b) {
    return l1_distance(eigenvalues(a), eigenvalues(b));
}

} // namespace oracle
