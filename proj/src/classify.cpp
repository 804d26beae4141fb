#include "homc/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homc {

namespace {

std::vector<int> mask_to_subset(std::uint32_t mask) {
    std::vector<int> subset;
    for (int s = 0; mask != 0; ++s, mask >>= 1) {
        if (mask & 1u) subset.push_back(s + 1);
    }
    return subset;
}

/// Aggregated n x N pattern of P^{(k)}: entry (i_1, c) is the OR over
/// reduced rows whose first component is i_1 of pattern(Q^k). By the
/// matricized power identity P^{(k)} = P^{(0)} Q^k this is exactly the
/// positivity pattern of the k-step tensor.
BitMatrix aggregate_pattern(const BitMatrix& qk, int n) {
    BitMatrix agg(n, qk.cols());
    for (std::int64_t r = 0; r < qk.rows(); ++r) {
        agg.or_row_from(qk, r, r % n);
    }
    return agg;
}

/// Contexts (i_2, ..., i_m) in lexicographic order, paired with their
/// 0-based linear positions.
void lex_contexts(int n, int length, MultiIndex& ctx, int depth, const std::function<void(const MultiIndex&)>& visit) {
    if (depth == length) {
        visit(ctx);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        ctx[static_cast<std::size_t>(depth)] = v;
        lex_contexts(n, length, ctx, depth + 1, visit);
    }
}

}  // namespace

IrreducibilityVerdict is_irreducible(const StochasticTensor& t, const Caps& caps) {
    const int n = t.dim();
    if (n > caps.max_subset_states) {
        throw CapacityError("subset enumeration refused for n = " + std::to_string(n) + " above cap " +
                            std::to_string(caps.max_subset_states));
    }
    if (n == 1) return {true, std::nullopt};  // no nonempty proper subsets

    // Collapse positive entries to (i_1, context-state mask) pairs.
    const int m = t.order();
    std::vector<std::vector<std::uint32_t>> masks_by_state(static_cast<std::size_t>(n));
    const std::int64_t contexts = t.context_count();
    for (std::int64_t c = 1; c <= contexts; ++c) {
        const MultiIndex ctx = from_linear(c, n, m - 1);
        std::uint32_t mask = 0;
        for (int comp : ctx) mask |= std::uint32_t{1} << (comp - 1);
        for (int i = 0; i < n; ++i) {
            if (t[(c - 1) * n + i] > 0.0) masks_by_state[static_cast<std::size_t>(i)].push_back(mask);
        }
    }
    for (auto& masks : masks_by_state) {
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }

    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    std::optional<std::vector<int>> best;
    for (std::uint32_t i = 1; i <= full; ++i) {
        const std::uint32_t subset = i ^ (i >> 1);  // Gray code
        if (subset == 0 || subset == full) continue;
        bool witnessed = false;
        for (int s = 0; s < n && !witnessed; ++s) {
            if (!(subset & (std::uint32_t{1} << s))) continue;
            for (std::uint32_t mask : masks_by_state[static_cast<std::size_t>(s)]) {
                if ((mask & subset) == 0) {  // context entirely in the complement
                    witnessed = true;
                    break;
                }
            }
        }
        if (!witnessed) {
            std::vector<int> violation = mask_to_subset(subset);
            if (!best || violation < *best) best = std::move(violation);
        }
    }
    if (best) return {false, std::move(best)};
    return {true, std::nullopt};
}

ErgodicityVerdict is_ergodic(const StochasticTensor& t, const Caps& caps) {
    const int n = t.dim();
    const ReducedMatrix q = build_reduced(t, caps);
    const PatternTrace trace = pattern_trace(q, 0, caps);
    BitMatrix covered(n, q.size());
    for (const BitMatrix& pat : trace.patterns) {
        const BitMatrix agg = aggregate_pattern(pat, n);
        for (std::int64_t r = 0; r < n; ++r) covered.or_row_from(agg, r, r);
    }
    if (covered.all_true()) return {true, std::nullopt};
    // Lexicographically smallest uncovered (i_1, i_2, ..., i_m).
    const int m = t.order();
    std::optional<MultiIndex> uncovered;
    for (int i1 = 1; i1 <= n && !uncovered; ++i1) {
        MultiIndex ctx(static_cast<std::size_t>(m - 1));
        std::function<void(const MultiIndex&)> visit = [&](const MultiIndex& candidate) {
            if (uncovered) return;
            const std::int64_t c = to_linear(candidate, n);
            if (!covered.get(i1 - 1, c - 1)) {
                MultiIndex full(candidate);
                full.insert(full.begin(), i1);
                uncovered = std::move(full);
            }
        };
        lex_contexts(n, m - 1, ctx, 0, visit);
    }
    return {false, std::move(uncovered)};
}

RegularityVerdict is_regular(const StochasticTensor& t, const Caps& caps) {
    const int n = t.dim();
    const ReducedMatrix q = build_reduced(t, caps);
    const PatternTrace trace = pattern_trace(q, 0, caps);
    for (std::size_t k = 0; k < trace.patterns.size(); ++k) {
        if (aggregate_pattern(trace.patterns[k], n).all_true()) {
            return {true, static_cast<std::int64_t>(k) + 1};
        }
    }
    return {false, std::nullopt};
}

RegularityVerdict regular_via_q(const StochasticTensor& t, const Caps& caps) {
    const RegularityWitness w = q_regular(build_reduced(t, caps), 0, caps);
    return {w.regular, w.witness_k};
}

ClassificationReport classify(const StochasticTensor& t, const Caps& caps) {
    ClassificationReport report;
    report.irreducible = is_irreducible(t, caps);
    report.ergodic = is_ergodic(t, caps);
    report.regular = is_regular(t, caps);
    report.via_q = regular_via_q(t, caps);
    report.caps = caps;
    report.caps.pattern_budget = caps.resolved_pattern_budget(t.context_count());
    if (report.regular.regular && !report.ergodic.ergodic) {
        throw std::logic_error("classification invariant violated: regular but not ergodic");
    }
    if (report.ergodic.ergodic && !report.irreducible.irreducible) {
        throw std::logic_error("classification invariant violated: ergodic but not irreducible");
    }
    if (report.via_q.regular &&
        (!report.regular.regular || *report.regular.witness_k > *report.via_q.witness_k)) {
        throw std::logic_error("classification invariant violated: Q regular without tensor regularity");
    }
    return report;
}

}  // namespace homc
