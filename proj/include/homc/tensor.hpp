#ifndef HOMC_TENSOR_HPP
#define HOMC_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "homc/errors.hpp"
#include "homc/indexing.hpp"
#include "homc/matrix.hpp"

namespace homc {

/// Order-m, dimension-n transition tensor in dense linear-index layout:
/// the entry for (i_1, ..., i_m) sits at position to_linear((i_1,...,i_m), n).
/// Entry (i_1, i_2, ..., i_m) is the probability of moving to state i_1
/// given that the last m-1 states were (i_2, ..., i_m), most recent first.
/// Immutable after construction.
class StochasticTensor {
public:
    StochasticTensor(int order, int dim, std::vector<double> values, const Caps& caps = {});

    int order() const { return order_; }
    int dim() const { return dim_; }
    /// Total entry count n^m.
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    /// Context count N = n^{m-1}; also the reduced chain's state count.
    std::int64_t context_count() const { return size() / dim_; }

    const std::vector<double>& values() const { return values_; }

    /// Entry at a full length-m multi-index (components checked).
    double at(const MultiIndex& idx) const;
    /// Raw 0-based access into the linear layout.
    double operator[](std::int64_t pos0) const { return values_[static_cast<std::size_t>(pos0)]; }

    /// Mode-1 fiber at a length-(m-1) context: v[i_1 - 1] = p_{i_1, ctx}.
    std::vector<double> fiber(const MultiIndex& ctx) const;

    double min_entry() const;
    double max_entry() const;

    bool operator==(const StochasticTensor& other) const {
        return order_ == other.order_ && dim_ == other.dim_ && values_ == other.values_;
    }

private:
    int order_;
    int dim_;
    std::vector<double> values_;
};

struct FiberViolation {
    MultiIndex context;  // (i_2, ..., i_m)
    double sum;
};

struct EntryViolation {
    MultiIndex index;  // (i_1, ..., i_m)
    double value;
};

/// Stochasticity report: empty violation lists iff the tensor is valid.
struct ValidationReport {
    std::vector<FiberViolation> fiber_violations;
    std::vector<EntryViolation> entry_violations;
    double tolerance = kStochasticTol;

    bool valid() const { return fiber_violations.empty() && entry_violations.empty(); }
};

/// Checks that every entry lies in [0, 1] and every mode-1 fiber sums to 1,
/// both within `tol`. Violations are reported, never repaired.
ValidationReport validate(const StochasticTensor& t, double tol = kStochasticTol);

/// The identity tensor: entry (i_1, ..., i_m) = 1 iff i_1 = i_2.
/// Its mode-1 matricization is [I_n I_n ... I_n].
StochasticTensor identity_tensor(int order, int dim, const Caps& caps = {});

/// Mode-1 matricization: frontal slices laid side by side, column c holding
/// the fiber at from_linear(c). With the linear-index layout this is exactly
/// the stored value sequence read as an n x n^{m-1} column-major matrix.
Matricization matricize(const StochasticTensor& t);

}  // namespace homc

#endif  // HOMC_TENSOR_HPP
