#ifndef HOMC_LIMITS_HPP
#define HOMC_LIMITS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "homc/reduced.hpp"
#include "homc/tensor.hpp"

namespace homc {

/// Length-n marginal probability distribution x_t (or a limit pi).
struct StateDistribution {
    std::vector<double> probs;
};

/// Length-N joint probability distribution y_t over length-(m-1)
/// multi-indices, most recent state first: the entry at the linear
/// position of (i_2, ..., i_m) is Pr(X_t = i_2, ..., X_{t-m+2} = i_m).
struct JointDistribution {
    std::vector<double> probs;
};

/// Throws unless probs is nonnegative and sums to 1 within tol.
void check_distribution(const std::vector<double>& probs, double tol = kStochasticTol);

/// Per-iteration record of the tensor-power contraction quantities:
/// upper[k-1] / lower[k-1] are the global max / min entries of the k-th
/// iterate, spreads[k-1] is max_i (max_ctx - min_ctx) of its state-i
/// fibers. epsilon is the smallest entry of the input tensor (the
/// reference positive tensor when it is strictly positive) and
/// bound_factor = 1 - 2 epsilon^{m-1}; for strictly positive inputs
/// spreads[k + m - 2] <= bound_factor * spreads[k - 1].
struct ConvergenceDiagnostics {
    double epsilon = 0.0;
    double bound_factor = 1.0;
    std::vector<double> spreads;
    std::vector<double> upper;
    std::vector<double> lower;
};

enum class LimitKind { RankOne, General, Cycle, Exhausted };

/// Result of tensor-power iteration. RankOne carries the limiting
/// distribution pi and the final iterate R (all fibers within tol of pi);
/// General carries a fixed-point tensor R without rank-one structure;
/// Cycle carries the detected period and one full cycle of iterates;
/// Exhausted carries the last iterate after the budget ran out.
struct LimitOutcome {
    LimitKind kind = LimitKind::Exhausted;
    std::optional<StateDistribution> pi;       // RankOne
    std::optional<StochasticTensor> limit;     // RankOne / General / Exhausted
    std::int64_t period = 0;                   // Cycle
    std::vector<StochasticTensor> representatives;  // Cycle
    std::int64_t iterations = 0;
    ConvergenceDiagnostics diagnostics;
};

struct LimitOptions {
    double tol = 1e-10;
    std::int64_t max_iter = 100000;
    int window = 16;   // cycle-detection lookback
    int patience = 0;  // consecutive stable steps before General; 0 means 2m
};

/// Carries the non-rank-one outcome when a limiting distribution was
/// requested but does not exist (or was not certified).
class NoLimitError : public Error {
public:
    NoLimitError(const std::string& msg, LimitOutcome outcome_)
        : Error(msg), outcome(std::move(outcome_)) {}
    LimitOutcome outcome;
};

/// The k-step product: out_{i_1 i_2 ... i_m} =
/// sum_j a_{i_1 j i_2 ... i_{m-1}} b_{j i_2 ... i_m}. Distributive but
/// neither commutative nor associative; summation runs in ascending j.
StochasticTensor boxtimes(const StochasticTensor& a, const StochasticTensor& b);

/// k-step transition tensor: identity for k = 0, then k applications of
/// the boxtimes recurrence.
StochasticTensor kstep(const StochasticTensor& t, std::int64_t k);

/// Iterates the tensor power sequence and classifies its limiting
/// behavior. Checks, in order at each iterate: rank-one structure (fiber
/// spread below tol), stabilization against the previous iterate (counted
/// toward the General verdict over `patience` consecutive steps), then a
/// revisit against the last `window` iterates at a 1000x tighter
/// threshold (periods >= 2 report a Cycle; the margin keeps convergent
/// spirals from masquerading as cycles). Budget exhaustion is an explicit
/// outcome, not an error.
LimitOutcome limit_tensor(const StochasticTensor& t, const LimitOptions& opts = {});

struct LimitingDistributionResult {
    StateDistribution pi;
    std::int64_t iterations = 0;
    ConvergenceDiagnostics diagnostics;
};

/// The limiting probability distribution via tensor powers; requires a
/// RankOne outcome and throws NoLimitError otherwise.
LimitingDistributionResult limiting_distribution(const StochasticTensor& t, const LimitOptions& opts = {});

/// A normalized nonnegative fixed point of Q by power iteration from the
/// uniform start, averaged over a window matching the pattern-cycle length
/// of Q. The averaging annihilates rotating unit-modulus components
/// exactly, so the residual ||Qy - y||_inf converges geometrically even
/// for non-regular Q.
JointDistribution stationary_joint(const ReducedMatrix& q, double tol = 1e-10,
                                   std::int64_t max_iter = 100000, const Caps& caps = {});

/// Limiting distribution through the reduced chain: pi = P^(0) y with y a
/// stationary joint distribution; the marginalization collapses the most
/// recent state. For regular tensors this agrees with the tensor-power
/// route no matter which fixed point the solver found.
StateDistribution limiting_distribution_eig(const StochasticTensor& t, double tol = 1e-10,
                                            std::int64_t max_iter = 100000, const Caps& caps = {});

/// Initial-dependent limit: entry i of the result is
/// sum_ctx r_{i, ctx} w_ctx with w the joint distribution of the first
/// m-1 states, indexed most recent first.
StateDistribution initial_dependent_limit(const StochasticTensor& r, const JointDistribution& w);

/// Marginal evolution x_{t+1} = P y_t with y_{t+1} = Q y_t; returns
/// x_m, ..., x_{m+steps-1} starting from y_init = y_{m-1}.
std::vector<StateDistribution> evolve(const StochasticTensor& t, const JointDistribution& y_init,
                                      std::int64_t steps, const Caps& caps = {});

}  // namespace homc

#endif  // HOMC_LIMITS_HPP
