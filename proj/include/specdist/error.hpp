#pragma once

#include <stdexcept>
#include <string>

namespace specdist {

enum class errc {
    order_too_small,
    index_out_of_range,
    invalid_graph,
    non_symmetric_input,
    no_convergence,
    length_mismatch,
    residue_mismatch,
    insufficient_samples,
    invalid_grid,
    parse_error,
};

inline const char* to_string(errc code) {
    switch (code) {
    case errc::order_too_small: return "order-too-small";
    case errc::index_out_of_range: return "index-out-of-range";
    case errc::invalid_graph: return "invalid-graph";
    case errc::non_symmetric_input: return "non-symmetric-input";
    case errc::no_convergence: return "no-convergence";
    case errc::length_mismatch: return "length-mismatch";
    case errc::residue_mismatch: return "residue-mismatch";
    case errc::insufficient_samples: return "insufficient-samples";
    case errc::invalid_grid: return "invalid-grid";
    case errc::parse_error: return "parse-error";
    }
    return "unknown";
}

/// Thrown by every precondition failure in the library. The message is
/// meant for users; code() is meant for callers that branch on the cause.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace specdist
