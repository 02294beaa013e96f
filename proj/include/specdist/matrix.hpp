#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specdist {

/// Dense square matrix, row-major. Only what the eigensolver and the
/// adjacency builder need.
class square_matrix {
public:
    square_matrix() = default;
    explicit square_matrix(std::size_t n, double fill = 0.0)
        : n_(n), data_(n * n, fill) {}

    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * n_, n_};
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const square_matrix&, const square_matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

} // namespace specdist
