#ifndef HOMC_TESTS_ORACLES_HPP
#define HOMC_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the library code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "homc/matrix.hpp"
#include "homc/reduced.hpp"
#include "homc/tensor.hpp"

namespace homc::testing {

/// Inverse of matricize: rebuilds the tensor from an n x n^{m-1} matrix.
StochasticTensor dematricize(const Matrix& p, int order, int dim);

/// Q assembled as the columnwise Khatri-Rao product G * P with
/// G = [I_{n^{m-2}} ... I_{n^{m-2}}] (n blocks): column c of Q is the
/// Kronecker product of column c of G with column c of P.
Matrix khatri_rao_reduced(const StochasticTensor& t);

/// Boolean positivity pattern of numeric Q^k by repeated dense products.
std::vector<std::vector<bool>> numeric_power_pattern(const Matrix& q, std::int64_t k);

/// Smallest k <= k_max with the k-step tensor entrywise positive, or 0.
std::int64_t brute_regular_witness(const StochasticTensor& t, std::int64_t k_max);

/// True iff every index tuple has some positive k-step probability with
/// k <= k_max.
bool brute_ergodic(const StochasticTensor& t, std::int64_t k_max);

/// Dense stochastic tensor with every fiber sampled from the open simplex.
StochasticTensor random_positive_tensor(std::mt19937_64& rng, int order, int dim);

/// Stochastic tensor with a random sparse support (every fiber keeps at
/// least one positive entry).
StochasticTensor random_sparse_tensor(std::mt19937_64& rng, int order, int dim);

/// The bundled model tensors, constructed in code.
StochasticTensor chain_2x2_absorbing();  // two absorbing histories, limit depends on the start
StochasticTensor chain_3x3_periodic();   // ergodic, non-regular, period-2 powers
StochasticTensor chain_4x4_regular();    // regular tensor whose reduced chain is not

#ifdef HOMC_HAVE_EIGEN
/// Basis of the kernel of (Q - I) via full-pivot LU.
std::vector<std::vector<double>> kernel_basis(const Matrix& q);
#endif

}  // namespace homc::testing

#endif  // HOMC_TESTS_ORACLES_HPP
