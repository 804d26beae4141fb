#ifndef HOMC_SIMULATE_HPP
#define HOMC_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "homc/limits.hpp"
#include "homc/tensor.hpp"

namespace homc {

/// One sampled realization of the chain. States are stored in time order
/// (X_1 first), so the first m-1 entries equal `initial`, which likewise
/// lists the seeding history oldest first. `dim` carries the state count
/// of the sampled model.
struct Trajectory {
    std::vector<int> states;
    std::uint64_t seed = 0;
    MultiIndex initial;
    int dim = 0;
};

/// Samples X_m, ..., X_T given the first m-1 states. Each step draws
/// X_{t+1} from the fiber at (X_t, ..., X_{t-m+2}) by inverse CDF over
/// states in ascending order. Randomness comes from std::mt19937_64 seeded
/// with `seed`, mapped to uniforms in [0,1) via the top 53 bits of each
/// output word, so trajectories are reproducible for a fixed seed.
/// The tensor must validate; an invalid one raises a model error.
Trajectory sample_path(const StochasticTensor& t, const MultiIndex& initial, std::int64_t length,
                       std::uint64_t seed);

/// Relative state frequencies over trajectory positions strictly after
/// burn_in (positions are 1-based).
StateDistribution empirical_distribution(const Trajectory& traj, std::int64_t burn_in);

}  // namespace homc

#endif  // HOMC_SIMULATE_HPP
