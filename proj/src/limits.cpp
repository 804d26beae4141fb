#include "homc/limits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace homc {

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

/// Per-state fiber extrema of an iterate: U[i] = max_ctx p_{i,ctx},
/// L[i] = min_ctx p_{i,ctx}.
void fiber_extrema(const StochasticTensor& t, std::vector<double>& upper, std::vector<double>& lower) {
    const int n = t.dim();
    upper.assign(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
    lower.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    const std::vector<double>& v = t.values();
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        const std::size_t i = pos % static_cast<std::size_t>(n);
        upper[i] = std::max(upper[i], v[pos]);
        lower[i] = std::min(lower[i], v[pos]);
    }
}

}  // namespace

void check_distribution(const std::vector<double>& probs, double tol) {
    double sum = 0.0;
    for (double p : probs) {
        if (p < -tol) throw ArgumentError("distribution has negative entry " + std::to_string(p));
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw ArgumentError("distribution sums to " + std::to_string(sum) + ", expected 1");
    }
}

StochasticTensor boxtimes(const StochasticTensor& a, const StochasticTensor& b) {
    const int m = a.order();
    const int n = a.dim();
    if (b.order() != m || b.dim() != n) {
        throw ShapeError("boxtimes operands must share order and dimension");
    }
    const std::int64_t contexts = a.context_count();
    std::vector<double> out(static_cast<std::size_t>(a.size()), 0.0);
    const std::vector<double>& av = a.values();
    const std::vector<double>& bv = b.values();
    const std::int64_t shared = contexts / n;  // combinations of (i_2 .. i_{m-1})
    for (std::int64_t c = 0; c < contexts; ++c) {
        // c encodes (i_2, ..., i_m); the first factor's context is
        // (j, i_2, ..., i_{m-1}), whose linear prefix is c mod shared.
        const std::int64_t head = c % shared;
        for (int i1 = 0; i1 < n; ++i1) {
            double sum = 0.0;
            for (int j = 0; j < n; ++j) {
                const std::int64_t a_ctx = static_cast<std::int64_t>(j) + head * n;
                sum += av[static_cast<std::size_t>(a_ctx * n + i1)] *
                       bv[static_cast<std::size_t>(c * n + j)];
            }
            out[static_cast<std::size_t>(c * n + i1)] = sum;
        }
    }
    return StochasticTensor(m, n, std::move(out));
}

StochasticTensor kstep(const StochasticTensor& t, std::int64_t k) {
    if (k < 0) throw ArgumentError("step count must be >= 0, got " + std::to_string(k));
    StochasticTensor acc = identity_tensor(t.order(), t.dim());
    for (std::int64_t i = 0; i < k; ++i) acc = boxtimes(acc, t);
    return acc;
}

LimitOutcome limit_tensor(const StochasticTensor& t, const LimitOptions& opts) {
    if (opts.tol <= 0.0) throw ArgumentError("tolerance must be positive");
    if (opts.max_iter < 1) throw ArgumentError("iteration budget must be >= 1");
    if (opts.window < 1) throw ArgumentError("cycle window must be >= 1");
    const int m = t.order();
    const int n = t.dim();
    const int patience = opts.patience > 0 ? opts.patience : 2 * m;

    LimitOutcome outcome;
    outcome.diagnostics.epsilon = std::max(t.min_entry(), 0.0);
    outcome.diagnostics.bound_factor =
        1.0 - 2.0 * std::pow(outcome.diagnostics.epsilon, m - 1);

    StochasticTensor current = t;
    std::deque<StochasticTensor> history;  // most recent last
    std::vector<double> upper, lower;
    int stable = 0;

    for (std::int64_t k = 1;; ++k) {
        fiber_extrema(current, upper, lower);
        double spread = 0.0;
        for (int i = 0; i < n; ++i) spread = std::max(spread, upper[i] - lower[i]);
        outcome.diagnostics.spreads.push_back(spread);
        outcome.diagnostics.upper.push_back(*std::max_element(upper.begin(), upper.end()));
        outcome.diagnostics.lower.push_back(*std::min_element(lower.begin(), lower.end()));

        if (spread < opts.tol) {
            std::vector<double> pi(static_cast<std::size_t>(n));
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                pi[static_cast<std::size_t>(i)] = 0.5 * (upper[i] + lower[i]);
                sum += pi[static_cast<std::size_t>(i)];
            }
            for (double& p : pi) p /= sum;
            outcome.kind = LimitKind::RankOne;
            outcome.pi = StateDistribution{std::move(pi)};
            outcome.limit = std::move(current);
            outcome.iterations = k;
            return outcome;
        }

        // Stabilization check against the immediate predecessor; counted
        // toward the General verdict once it persists for `patience` steps.
        if (!history.empty() &&
            max_abs_diff(current.values(), history.back().values()) <= opts.tol) {
            if (++stable >= patience) {
                outcome.kind = LimitKind::General;
                outcome.limit = std::move(current);
                outcome.iterations = k;
                return outcome;
            }
        } else {
            stable = 0;
            // Cycle scan at periods >= 2. A convergent spiral can pass
            // within tol of an iterate a few steps back, so genuine
            // revisits must clear a much tighter threshold; exact cycles
            // (the common case) revisit to the last bit.
            const double revisit_tol = 1e-3 * opts.tol;
            std::int64_t found = 0;
            for (std::size_t back = 1; back < history.size(); ++back) {
                const StochasticTensor& past = history[history.size() - 1 - back];
                if (max_abs_diff(current.values(), past.values()) <= revisit_tol) {
                    found = static_cast<std::int64_t>(back) + 1;
                    break;
                }
            }
            if (found >= 2) {
                outcome.kind = LimitKind::Cycle;
                outcome.period = found;
                outcome.representatives.assign(history.end() - (found - 1), history.end());
                outcome.representatives.push_back(current);
                outcome.iterations = k;
                return outcome;
            }
        }

        if (k >= opts.max_iter) {
            outcome.kind = LimitKind::Exhausted;
            outcome.limit = std::move(current);
            outcome.iterations = k;
            return outcome;
        }

        history.push_back(current);
        if (static_cast<int>(history.size()) > opts.window) history.pop_front();
        current = boxtimes(current, t);
    }
}

LimitingDistributionResult limiting_distribution(const StochasticTensor& t, const LimitOptions& opts) {
    LimitOutcome outcome = limit_tensor(t, opts);
    if (outcome.kind != LimitKind::RankOne) {
        const char* what = outcome.kind == LimitKind::General  ? "limit exists but depends on the initial distributions"
                           : outcome.kind == LimitKind::Cycle ? "tensor powers cycle; no limit exists"
                                                              : "iteration budget exhausted before convergence";
        throw NoLimitError(std::string("no limiting probability distribution: ") + what, std::move(outcome));
    }
    return {*outcome.pi, outcome.iterations, std::move(outcome.diagnostics)};
}

JointDistribution stationary_joint(const ReducedMatrix& q, double tol, std::int64_t max_iter,
                                   const Caps& caps) {
    if (tol <= 0.0) throw ArgumentError("tolerance must be positive");
    const std::int64_t N = q.size();
    const std::int64_t window = pattern_trace(q, 0, caps).cycle_length;

    std::vector<double> y(static_cast<std::size_t>(N), 1.0 / static_cast<double>(N));
    std::deque<std::vector<double>> recent{y};
    for (std::int64_t k = 1; k <= max_iter; ++k) {
        y = q.q.multiply(y);
        recent.push_back(y);
        if (static_cast<std::int64_t>(recent.size()) > window) recent.pop_front();
        if (static_cast<std::int64_t>(recent.size()) < window) continue;

        std::vector<double> avg(static_cast<std::size_t>(N), 0.0);
        for (const auto& it : recent) {
            for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += it[i];
        }
        double sum = 0.0;
        for (double& v : avg) {
            v /= static_cast<double>(window);
            sum += v;
        }
        for (double& v : avg) v /= sum;
        if (max_abs_diff(q.q.multiply(avg), avg) <= tol) {
            return {std::move(avg)};
        }
    }
    throw BudgetError("stationary joint iteration did not reach residual " + std::to_string(tol) +
                      " within " + std::to_string(max_iter) + " steps");
}

StateDistribution limiting_distribution_eig(const StochasticTensor& t, double tol,
                                            std::int64_t max_iter, const Caps& caps) {
    const ReducedMatrix q = build_reduced(t, caps);
    const JointDistribution y = stationary_joint(q, tol, max_iter, caps);
    const int n = t.dim();
    // pi = P^(0) y: row i of P^(0) selects contexts whose first component is i.
    std::vector<double> pi(static_cast<std::size_t>(n), 0.0);
    for (std::size_t c = 0; c < y.probs.size(); ++c) {
        pi[c % static_cast<std::size_t>(n)] += y.probs[c];
    }
    return {std::move(pi)};
}

StateDistribution initial_dependent_limit(const StochasticTensor& r, const JointDistribution& w) {
    const int n = r.dim();
    if (static_cast<std::int64_t>(w.probs.size()) != r.context_count()) {
        throw ShapeError("joint distribution length " + std::to_string(w.probs.size()) +
                         " does not match context count " + std::to_string(r.context_count()));
    }
    check_distribution(w.probs);
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    const std::vector<double>& v = r.values();
    for (std::size_t c = 0; c < w.probs.size(); ++c) {
        const double wc = w.probs[c];
        if (wc == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] += v[c * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] * wc;
        }
    }
    return {std::move(x)};
}

std::vector<StateDistribution> evolve(const StochasticTensor& t, const JointDistribution& y_init,
                                      std::int64_t steps, const Caps& caps) {
    if (steps < 1) throw ArgumentError("step count must be >= 1, got " + std::to_string(steps));
    if (static_cast<std::int64_t>(y_init.probs.size()) != t.context_count()) {
        throw ShapeError("joint distribution length " + std::to_string(y_init.probs.size()) +
                         " does not match context count " + std::to_string(t.context_count()));
    }
    check_distribution(y_init.probs);
    const ReducedMatrix q = build_reduced(t, caps);
    const Matricization p = matricize(t);
    std::vector<StateDistribution> marginals;
    marginals.reserve(static_cast<std::size_t>(steps));
    std::vector<double> y = y_init.probs;
    for (std::int64_t s = 0; s < steps; ++s) {
        marginals.push_back({p.multiply(y)});
        if (s + 1 < steps) y = q.q.multiply(y);
    }
    return marginals;
}

}  // namespace homc
