#ifndef HOMC_ERRORS_HPP
#define HOMC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homc {

/// Base class for all homc errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A multi-index component or linear position is out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Dimensions of an input do not match what the operation requires.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An operation was given an argument that violates its preconditions.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A configured size cap would be exceeded (dense storage refused).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An iteration budget ran out before the operation could finish.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A model fails validation where a valid one is required (e.g. sampling).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Size caps enforced by operations that allocate dense storage or
/// enumerate exponentially large sets. All caps are configurable.
struct Caps {
    /// Maximum number of dense tensor entries n^m.
    std::int64_t max_entries = 100'000'000;
    /// Maximum side length N = n^{m-1} of the reduced transition matrix.
    std::int64_t max_reduced_dim = 4096;
    /// Maximum state count for subset enumeration in irreducibility checks.
    int max_subset_states = 20;
    /// Pattern-trace step budget; 0 means the default N^2 + N.
    std::int64_t pattern_budget = 0;

    std::int64_t resolved_pattern_budget(std::int64_t reduced_dim) const {
        return pattern_budget > 0 ? pattern_budget
                                  : reduced_dim * reduced_dim + reduced_dim;
    }
};

/// Tolerance used when checking that probability vectors sum to one.
inline constexpr double kStochasticTol = 1e-12;

}  // namespace homc

#endif  // HOMC_ERRORS_HPP
