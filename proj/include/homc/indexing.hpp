#ifndef HOMC_INDEXING_HPP
#define HOMC_INDEXING_HPP

#include <cstdint>
#include <vector>

#include "homc/errors.hpp"

namespace homc {

/// A 1-based multi-index over the state space {1, ..., n}.
using MultiIndex = std::vector<int>;

/// n^length computed with overflow checks, rejecting results above `cap`.
std::int64_t checked_pow(int n, int length, std::int64_t cap);

/// Maps the multi-index (j_1, ..., j_L) to the 1-based linear position
/// j_1 + n(j_2 - 1) + ... + n^{L-1}(j_L - 1). The first component varies
/// fastest, so enumerating positions 1..n^L lists multi-indices in the
/// order 11...1, 21...1, ..., nn...n.
std::int64_t to_linear(const MultiIndex& idx, int n);

/// Inverse of to_linear for a multi-index of the given length.
MultiIndex from_linear(std::int64_t pos, int n, int length);

/// Fixes the bijection between length-L multi-indices over {1..n} and
/// linear positions 1..n^L.
struct LinearIndexer {
    int n;
    int length;
    std::int64_t size;

    LinearIndexer(int n_, int length_, const Caps& caps = {});

    std::int64_t to_linear(const MultiIndex& idx) const;
    MultiIndex from_linear(std::int64_t pos) const;
};

}  // namespace homc

#endif  // HOMC_INDEXING_HPP
