#include "homc/simulate.hpp"

#include <random>
#include <string>

namespace homc {

namespace {

/// Uniform double in [0,1) from the top 53 bits of one generator word.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Trajectory sample_path(const StochasticTensor& t, const MultiIndex& initial, std::int64_t length,
                       std::uint64_t seed) {
    const int m = t.order();
    const int n = t.dim();
    if (static_cast<int>(initial.size()) != m - 1) {
        throw ShapeError("initial history has length " + std::to_string(initial.size()) +
                         ", expected m-1 = " + std::to_string(m - 1));
    }
    for (int s : initial) {
        if (s < 1 || s > n) {
            throw IndexError("initial state " + std::to_string(s) + " out of range [1, " +
                             std::to_string(n) + "]");
        }
    }
    if (length < m - 1) {
        throw ArgumentError("trajectory length " + std::to_string(length) + " shorter than history m-1 = " +
                            std::to_string(m - 1));
    }
    const ValidationReport report = validate(t);
    if (!report.valid()) {
        std::string where;
        if (!report.fiber_violations.empty()) {
            where = "fiber (";
            for (std::size_t i = 0; i < report.fiber_violations[0].context.size(); ++i) {
                if (i) where += ",";
                where += std::to_string(report.fiber_violations[0].context[i]);
            }
            where += ") sums to " + std::to_string(report.fiber_violations[0].sum);
        } else {
            where = "an entry lies outside [0, 1]";
        }
        throw ModelError("cannot sample from an invalid tensor: " + where);
    }

    // Cumulative fiber table: row c holds the running sums of the fiber at
    // 0-based context c.
    const std::int64_t contexts = t.context_count();
    std::vector<double> cdf(static_cast<std::size_t>(contexts * n));
    for (std::int64_t c = 0; c < contexts; ++c) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += t[c * n + i];
            cdf[static_cast<std::size_t>(c * n + i)] = acc;
        }
    }

    Trajectory traj;
    traj.seed = seed;
    traj.initial = initial;
    traj.dim = n;
    traj.states = initial;
    traj.states.reserve(static_cast<std::size_t>(length));

    // 0-based linear context (X_t, ..., X_{t-m+2}), most recent first.
    std::int64_t ctx = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        // initial is oldest first; the context wants most recent first.
        ctx += static_cast<std::int64_t>(initial[initial.size() - 1 - i] - 1) * stride;
        stride *= n;
    }
    const std::int64_t shift = stride / n;  // n^{m-2}

    std::mt19937_64 rng(seed);
    for (std::int64_t pos = m; pos <= length; ++pos) {
        const double u = next_uniform(rng);
        const double* row = &cdf[static_cast<std::size_t>(ctx * n)];
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (u < row[i]) {
                next = i + 1;
                break;
            }
        }
        if (next == 0) {
            // u fell into the rounding sliver past the last cumulative sum;
            // take the largest state with positive mass.
            next = n;
            for (int i = n - 1; i > 0 && row[i] == row[i - 1]; --i) next = i;
        }
        traj.states.push_back(next);
        ctx = (next - 1) + (ctx % shift) * n;
    }
    return traj;
}

StateDistribution empirical_distribution(const Trajectory& traj, std::int64_t burn_in) {
    const std::int64_t length = static_cast<std::int64_t>(traj.states.size());
    if (burn_in < 0) throw ArgumentError("burn-in must be >= 0");
    if (burn_in >= length) {
        throw ArgumentError("burn-in " + std::to_string(burn_in) + " leaves no positions in a length-" +
                            std::to_string(length) + " trajectory");
    }
    if (traj.dim < 1) throw ArgumentError("trajectory carries no state count");
    std::vector<double> freq(static_cast<std::size_t>(traj.dim), 0.0);
    for (std::int64_t pos = burn_in; pos < length; ++pos) {
        freq[static_cast<std::size_t>(traj.states[static_cast<std::size_t>(pos)] - 1)] += 1.0;
    }
    const double total = static_cast<double>(length - burn_in);
    for (double& f : freq) f /= total;
    return {std::move(freq)};
}

}  // namespace homc
