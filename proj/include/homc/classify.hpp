#ifndef HOMC_CLASSIFY_HPP
#define HOMC_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "homc/reduced.hpp"
#include "homc/tensor.hpp"

namespace homc {

struct IrreducibilityVerdict {
    bool irreducible = false;
    /// Violating subset J (ascending state labels) when not irreducible;
    /// the lexicographically smallest one.
    std::optional<std::vector<int>> counterexample;
};

struct ErgodicityVerdict {
    bool ergodic = false;
    /// Lexicographically smallest (i_1, ..., i_m) whose k-step probability
    /// is zero for every k, when not ergodic.
    std::optional<MultiIndex> uncovered_index;
};

struct RegularityVerdict {
    bool regular = false;
    /// Smallest k certifying positivity, when regular.
    std::optional<std::int64_t> witness_k;
};

/// Combined verdicts; generation asserts the implication chain
/// regular => ergodic => irreducible and q_regular => regular.
struct ClassificationReport {
    IrreducibilityVerdict irreducible;
    ErgodicityVerdict ergodic;
    RegularityVerdict regular;
    RegularityVerdict via_q;
    Caps caps;
};

/// Irreducibility: every nonempty proper subset J of the state space has a
/// positive entry p_{i_1 ... i_m} with i_1 in J and (i_2,...,i_m) entirely
/// in the complement. Enumerates all 2^n - 2 subsets (Gray-code order,
/// short-circuiting each subset at its first witness); refuses n above the
/// subset-enumeration cap.
IrreducibilityVerdict is_irreducible(const StochasticTensor& t, const Caps& caps = {});

/// Ergodicity: for every index tuple some k >= 1 (tuple-dependent) makes
/// its k-step probability positive. Decided from the union of the k-step
/// positivity patterns taken through the first pattern repeat.
ErgodicityVerdict is_ergodic(const StochasticTensor& t, const Caps& caps = {});

/// Regularity: a single k >= 1 makes every k-step probability positive.
/// witness_k is the smallest such k, found by scanning aggregated patterns
/// through the first pattern repeat.
RegularityVerdict is_regular(const StochasticTensor& t, const Caps& caps = {});

/// Sufficient test through the reduced chain: Q regular implies the tensor
/// is regular with a witness no larger than Q's. A false result is
/// inconclusive for the tensor (the converse fails).
RegularityVerdict regular_via_q(const StochasticTensor& t, const Caps& caps = {});

ClassificationReport classify(const StochasticTensor& t, const Caps& caps = {});

}  // namespace homc

#endif  // HOMC_CLASSIFY_HPP
