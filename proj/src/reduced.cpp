#include "homc/reduced.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace homc {

BitMatrix BitMatrix::from_support(const Matrix& m) {
    BitMatrix out(m.rows(), m.cols());
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        for (std::int64_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) > 0.0) out.set(r, c);
        }
    }
    return out;
}

BitMatrix BitMatrix::bool_product(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("boolean product shape mismatch");
    BitMatrix out(rows_, rhs.cols_);
    // out.row(r) = OR of rhs.row(k) over k with this[r][k] set.
    for (std::int64_t r = 0; r < rows_; ++r) {
        std::uint64_t* out_row = &out.bits_[static_cast<std::size_t>(r * out.words_per_row_)];
        for (std::int64_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            const std::uint64_t* rhs_row = &rhs.bits_[static_cast<std::size_t>(k * rhs.words_per_row_)];
            for (std::int64_t w = 0; w < out.words_per_row_; ++w) out_row[w] |= rhs_row[w];
        }
    }
    return out;
}

void BitMatrix::or_row_from(const BitMatrix& src, std::int64_t src_row, std::int64_t dst_row) {
    if (cols_ != src.cols_) throw ShapeError("row OR shape mismatch");
    std::uint64_t* dst = &bits_[static_cast<std::size_t>(dst_row * words_per_row_)];
    const std::uint64_t* from = &src.bits_[static_cast<std::size_t>(src_row * src.words_per_row_)];
    for (std::int64_t w = 0; w < words_per_row_; ++w) dst[w] |= from[w];
}

bool BitMatrix::all_true() const {
    for (std::int64_t r = 0; r < rows_; ++r) {
        for (std::int64_t w = 0; w < words_per_row_; ++w) {
            const std::int64_t lo = w * 64;
            const std::int64_t bits_here = std::min<std::int64_t>(64, cols_ - lo);
            std::uint64_t mask = bits_here == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits_here) - 1);
            if ((bits_[static_cast<std::size_t>(r * words_per_row_ + w)] & mask) != mask) return false;
        }
    }
    return true;
}

std::size_t BitMatrix::hash() const {
    // FNV-1a over the packed words.
    std::size_t h = 14695981039346656037ull;
    for (std::uint64_t w : bits_) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

ReducedMatrix build_reduced(const StochasticTensor& t, const Caps& caps) {
    const int m = t.order();
    const int n = t.dim();
    const std::int64_t N = t.context_count();
    if (N > caps.max_reduced_dim) {
        throw CapacityError("reduced dimension N = " + std::to_string(N) + " exceeds cap " +
                            std::to_string(caps.max_reduced_dim));
    }
    Matrix q(N, N);
    if (m == 2) {
        // First-order chain: the reduced chain is the chain itself.
        for (std::int64_t c = 0; c < N; ++c) {
            for (int i = 0; i < n; ++i) q.at(i, c) = t[c * n + i];
        }
        return {m, n, std::move(q)};
    }
    // Column (j_2,...,j_m) has nonzeros at rows (i_1, j_2,...,j_{m-1}),
    // holding the mode-1 fiber at that column's context.
    const std::int64_t shared = N / n;  // n^{m-2} combinations of (j_2..j_{m-1})
    for (std::int64_t col = 0; col < N; ++col) {
        const std::int64_t row_base = col % shared;  // 0-based lin of (j_2..j_{m-1}) minus 1
        for (int i = 0; i < n; ++i) {
            q.at(row_base * n + i, col) = t[col * n + i];
        }
    }
    return {m, n, std::move(q)};
}

Matrix matrix_power(const ReducedMatrix& q, std::int64_t k) {
    if (k < 0) throw ArgumentError("matrix power exponent must be >= 0, got " + std::to_string(k));
    Matrix out = Matrix::identity(q.size());
    for (std::int64_t i = 0; i < k; ++i) out = out.multiply(q.q);
    return out;
}

PatternTrace pattern_trace(const ReducedMatrix& q, std::int64_t max_steps, const Caps& caps) {
    const std::int64_t budget = max_steps > 0 ? max_steps : caps.resolved_pattern_budget(q.size());
    if (budget < 1) throw ArgumentError("pattern budget must be >= 1");
    PatternTrace trace;
    std::unordered_map<std::size_t, std::vector<std::int64_t>> seen;  // hash -> 1-based exponents
    BitMatrix current = BitMatrix::from_support(q.q);
    const BitMatrix step = current;
    for (std::int64_t k = 1; k <= budget; ++k) {
        const std::size_t h = current.hash();
        if (auto it = seen.find(h); it != seen.end()) {
            for (std::int64_t prev : it->second) {
                if (trace.patterns[static_cast<std::size_t>(prev - 1)] == current) {
                    trace.patterns.push_back(current);
                    trace.cycle_start = prev;
                    trace.cycle_length = k - prev;
                    return trace;
                }
            }
        }
        trace.patterns.push_back(current);
        seen[h].push_back(k);
        current = current.bool_product(step);
    }
    throw BudgetError("pattern trace found no repeat within " + std::to_string(budget) + " steps");
}

RegularityWitness q_regular(const ReducedMatrix& q, std::int64_t max_steps, const Caps& caps) {
    const PatternTrace trace = pattern_trace(q, max_steps, caps);
    for (std::size_t i = 0; i < trace.patterns.size(); ++i) {
        if (trace.patterns[i].all_true()) {
            return {true, static_cast<std::int64_t>(i) + 1};
        }
    }
    return {false, std::nullopt};
}

Matrix closed_form_power(const StochasticTensor& t, int ell, const Caps& caps) {
    const int m = t.order();
    const int n = t.dim();
    if (ell < 2 || ell > m - 1) {
        throw ArgumentError("closed-form exponent must lie in [2, m-1], got " + std::to_string(ell));
    }
    if (t.min_entry() <= 0.0) {
        throw ArgumentError("closed-form power requires a strictly positive tensor");
    }
    const std::int64_t N = t.context_count();
    if (N > caps.max_reduced_dim) {
        throw CapacityError("reduced dimension N = " + std::to_string(N) + " exceeds cap " +
                            std::to_string(caps.max_reduced_dim));
    }
    Matrix out(N, N);
    MultiIndex entry(static_cast<std::size_t>(m));
    for (std::int64_t row = 1; row <= N; ++row) {
        const MultiIndex ri = from_linear(row, n, m - 1);  // (i_1, ..., i_{m-1})
        for (std::int64_t col = 1; col <= N; ++col) {
            const MultiIndex cj = from_linear(col, n, m - 1);  // (j_1, ..., j_{m-1})
            // Chain condition: j_1 = i_{l+1}, ..., j_{m-l-1} = i_{m-1}.
            bool compatible = true;
            for (int s = 1; s <= m - ell - 1; ++s) {
                if (cj[s - 1] != ri[ell + s - 1]) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            // Factor s (1-based): p_{i_s ... i_{m-1} j_{m-l} ... j_{m-l+s-1}}.
            double prod = 1.0;
            for (int s = 1; s <= ell; ++s) {
                int pos = 0;
                for (int a = s; a <= m - 1; ++a) entry[pos++] = ri[a - 1];
                for (int b = m - ell; b <= m - ell + s - 1; ++b) entry[pos++] = cj[b - 1];
                prod *= t.at(entry);
            }
            out.at(row - 1, col - 1) = prod;
        }
    }
    return out;
}

}  // namespace homc
