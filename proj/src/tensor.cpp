#include "homc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace homc {

StochasticTensor::StochasticTensor(int order, int dim, std::vector<double> values, const Caps& caps)
    : order_(order), dim_(dim), values_(std::move(values)) {
    if (order_ < 2) throw ArgumentError("tensor order must be >= 2, got " + std::to_string(order_));
    if (dim_ < 1) throw ArgumentError("tensor dimension must be >= 1, got " + std::to_string(dim_));
    const std::int64_t expected = checked_pow(dim_, order_, caps.max_entries);
    if (static_cast<std::int64_t>(values_.size()) != expected) {
        throw ShapeError("tensor value count " + std::to_string(values_.size()) + " does not match n^m = " +
                         std::to_string(expected));
    }
}

double StochasticTensor::at(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != order_) {
        throw ShapeError("multi-index has length " + std::to_string(idx.size()) + ", expected order " +
                         std::to_string(order_));
    }
    return values_[static_cast<std::size_t>(to_linear(idx, dim_) - 1)];
}

std::vector<double> StochasticTensor::fiber(const MultiIndex& ctx) const {
    if (static_cast<int>(ctx.size()) != order_ - 1) {
        throw ShapeError("context has length " + std::to_string(ctx.size()) + ", expected m-1 = " +
                         std::to_string(order_ - 1));
    }
    const std::int64_t c = to_linear(ctx, dim_);
    const std::size_t base = static_cast<std::size_t>((c - 1) * dim_);
    return std::vector<double>(values_.begin() + base, values_.begin() + base + dim_);
}

double StochasticTensor::min_entry() const {
    return *std::min_element(values_.begin(), values_.end());
}

double StochasticTensor::max_entry() const {
    return *std::max_element(values_.begin(), values_.end());
}

ValidationReport validate(const StochasticTensor& t, double tol) {
    ValidationReport report;
    report.tolerance = tol;
    const int n = t.dim();
    const std::int64_t contexts = t.context_count();
    for (std::int64_t c = 1; c <= contexts; ++c) {
        const std::size_t base = static_cast<std::size_t>((c - 1) * n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = t[static_cast<std::int64_t>(base) + i];
            sum += v;
            if (v < -tol || v > 1.0 + tol) {
                MultiIndex idx = from_linear(c, n, t.order() - 1);
                idx.insert(idx.begin(), i + 1);
                report.entry_violations.push_back({std::move(idx), v});
            }
        }
        if (std::abs(sum - 1.0) > tol) {
            report.fiber_violations.push_back({from_linear(c, n, t.order() - 1), sum});
        }
    }
    return report;
}

StochasticTensor identity_tensor(int order, int dim, const Caps& caps) {
    const std::int64_t total = checked_pow(dim, order, caps.max_entries);
    std::vector<double> values(static_cast<std::size_t>(total), 0.0);
    // delta_{i_1 i_2 ... i_m} = 1 iff i_1 = i_2, independent of i_3..i_m.
    const std::int64_t pairs = total / (static_cast<std::int64_t>(dim) * dim);
    for (std::int64_t rest = 0; rest < pairs; ++rest) {
        for (int i = 0; i < dim; ++i) {
            values[static_cast<std::size_t>(rest * dim * dim + i * dim + i)] = 1.0;
        }
    }
    return StochasticTensor(order, dim, std::move(values), caps);
}

Matricization matricize(const StochasticTensor& t) {
    const int n = t.dim();
    const std::int64_t cols = t.context_count();
    Matrix out(n, cols);
    for (std::int64_t c = 0; c < cols; ++c) {
        for (int i = 0; i < n; ++i) {
            out.at(i, c) = t[c * n + i];
        }
    }
    return out;
}

}  // namespace homc
