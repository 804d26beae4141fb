#ifndef HOMC_REDUCED_HPP
#define HOMC_REDUCED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "homc/matrix.hpp"
#include "homc/tensor.hpp"

namespace homc {

/// Column-stochastic N x N transition matrix of the reduced first-order
/// chain Y_t = (X_t, ..., X_{t-m+2}), rows and columns indexed by length
/// (m-1) multi-indices via to_linear. Entry (row (i_1,...,i_{m-1}),
/// col (j_2,...,j_m)) equals p_{i_1 i_2 ... i_{m-1} j_m} when i_l = j_l for
/// all l = 2..m-1 and is exactly zero otherwise.
struct ReducedMatrix {
    int order;
    int dim;
    Matrix q;

    std::int64_t size() const { return q.rows(); }
};

/// Boolean matrix, bit-packed by rows.
class BitMatrix {
public:
    BitMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows),
          cols_(cols),
          words_per_row_((cols + 63) / 64),
          bits_(static_cast<std::size_t>(rows * words_per_row_), 0) {}

    static BitMatrix from_support(const Matrix& m);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    bool get(std::int64_t r, std::int64_t c) const {
        return (bits_[static_cast<std::size_t>(r * words_per_row_ + c / 64)] >> (c % 64)) & 1u;
    }
    void set(std::int64_t r, std::int64_t c) {
        bits_[static_cast<std::size_t>(r * words_per_row_ + c / 64)] |= std::uint64_t{1} << (c % 64);
    }

    /// Boolean matrix product: out[r][c] = OR_k (this[r][k] AND rhs[k][c]).
    BitMatrix bool_product(const BitMatrix& rhs) const;

    /// OR a row of src into a row of this (same column count).
    void or_row_from(const BitMatrix& src, std::int64_t src_row, std::int64_t dst_row);

    bool all_true() const;
    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

    std::size_t hash() const;

private:
    std::int64_t rows_;
    std::int64_t cols_;
    std::int64_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

/// Positivity patterns of Q^1, Q^2, ... up to and including the first
/// repeated pattern: patterns[k-1] is the pattern of Q^k, the last stored
/// pattern equals patterns[cycle_start - 1], and everything before it is
/// distinct. cycle_start and cycle_length are exponents (1-based).
struct PatternTrace {
    std::vector<BitMatrix> patterns;
    std::int64_t cycle_start = 0;
    std::int64_t cycle_length = 0;
};

struct RegularityWitness {
    bool regular = false;
    std::optional<std::int64_t> witness_k;
};

/// Builds Q from the sparsity rule by direct index placement. For m = 2 the
/// reduced chain is the chain itself and Q is the tensor's own matrix.
ReducedMatrix build_reduced(const StochasticTensor& t, const Caps& caps = {});

/// Q^k by repeated multiplication in ascending index order; k = 0 gives I.
Matrix matrix_power(const ReducedMatrix& q, std::int64_t k);

/// Iterates boolean patterns of Q^k until the first repeat. The boolean
/// state space is finite so a repeat always exists; max_steps (0 means the
/// caps default N^2 + N) bounds the search and exhausting it raises a
/// budget error.
PatternTrace pattern_trace(const ReducedMatrix& q, std::int64_t max_steps = 0, const Caps& caps = {});

/// First-order regularity of Q: some Q^k is entrywise positive. witness_k
/// is the smallest such exponent.
RegularityWitness q_regular(const ReducedMatrix& q, std::int64_t max_steps = 0, const Caps& caps = {});

/// Closed-form Q^l for strictly positive tensors and 2 <= l <= m-1: the
/// entry at (row (i_1..i_{m-1}), col (j_1..j_{m-1})) is the l-fold product
/// p_{i_1...i_{m-1} j_{m-l}} p_{i_2...i_{m-1} j_{m-l} j_{m-l+1}} ...
/// p_{i_l...i_{m-1} j_{m-l}...j_{m-1}} when j_1 = i_{l+1}, ...,
/// j_{m-l-1} = i_{m-1}, and zero otherwise. For l = m-1 no constraint
/// remains and every entry is positive.
Matrix closed_form_power(const StochasticTensor& t, int ell, const Caps& caps = {});

}  // namespace homc

#endif  // HOMC_REDUCED_HPP
