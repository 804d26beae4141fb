#include "homc/indexing.hpp"

#include <limits>
#include <string>

namespace homc {

std::int64_t checked_pow(int n, int length, std::int64_t cap) {
    if (n < 1) throw ArgumentError("state count must be >= 1, got " + std::to_string(n));
    if (length < 1) throw ArgumentError("multi-index length must be >= 1, got " + std::to_string(length));
    std::int64_t result = 1;
    for (int i = 0; i < length; ++i) {
        if (__builtin_mul_overflow(result, static_cast<std::int64_t>(n), &result) || result > cap) {
            throw CapacityError("size " + std::to_string(n) + "^" + std::to_string(length) +
                                " exceeds cap " + std::to_string(cap));
        }
    }
    return result;
}

std::int64_t to_linear(const MultiIndex& idx, int n) {
    if (idx.empty()) throw ArgumentError("multi-index must have length >= 1");
    std::int64_t pos = 0;
    std::int64_t stride = 1;
    for (int component : idx) {
        if (component < 1 || component > n) {
            throw IndexError("multi-index component " + std::to_string(component) +
                             " out of range [1, " + std::to_string(n) + "]");
        }
        pos += static_cast<std::int64_t>(component - 1) * stride;
        stride *= n;
    }
    return pos + 1;
}

MultiIndex from_linear(std::int64_t pos, int n, int length) {
    const std::int64_t size = checked_pow(n, length, std::numeric_limits<std::int64_t>::max());
    if (pos < 1 || pos > size) {
        throw IndexError("linear position " + std::to_string(pos) + " out of range [1, " +
                         std::to_string(size) + "]");
    }
    MultiIndex idx(length);
    std::int64_t rem = pos - 1;
    for (int i = 0; i < length; ++i) {
        idx[i] = static_cast<int>(rem % n) + 1;
        rem /= n;
    }
    return idx;
}

LinearIndexer::LinearIndexer(int n_, int length_, const Caps& caps)
    : n(n_), length(length_), size(checked_pow(n_, length_, caps.max_entries)) {}

std::int64_t LinearIndexer::to_linear(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != length) {
        throw ShapeError("multi-index has length " + std::to_string(idx.size()) + ", expected " +
                         std::to_string(length));
    }
    return homc::to_linear(idx, n);
}

MultiIndex LinearIndexer::from_linear(std::int64_t pos) const {
    if (pos < 1 || pos > size) {
        throw IndexError("linear position " + std::to_string(pos) + " out of range [1, " +
                         std::to_string(size) + "]");
    }
    return homc::from_linear(pos, n, length);
}

}  // namespace homc
