#include <doctest.h>

#include <random>

#include "homc/simulate.hpp"
#include "support/oracles.hpp"

using namespace homc;

TEST_CASE("absorbing start produces a constant trajectory for any seed") {
    const StochasticTensor t = testing::chain_2x2_absorbing();
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        const Trajectory traj = sample_path(t, {1, 1}, 50, seed);
        REQUIRE(traj.states.size() == 50);
        for (int s : traj.states) CHECK(s == 1);
    }
}

TEST_CASE("periodic start returns to state 2 at every odd time") {
    const StochasticTensor t = testing::chain_3x3_periodic();
    const Trajectory traj = sample_path(t, {1, 1}, 101, 12345);
    for (std::size_t pos = 3; pos <= traj.states.size(); pos += 2) {
        CHECK(traj.states[pos - 1] == 2);
    }
}

TEST_CASE("deterministic permutation tensors walk their orbit seed-independently") {
    // Order-2 tensor moving j -> j+1 cyclically.
    const int n = 4;
    std::vector<double> values(n * n, 0.0);
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(j * n + (j + 1) % n)] = 1.0;
    const StochasticTensor t(2, n, std::move(values));
    const std::vector<int> expected = {3, 4, 1, 2, 3, 4, 1, 2};
    for (std::uint64_t seed : {7ull, 8ull}) {
        const Trajectory traj = sample_path(t, {3}, 8, seed);
        CHECK(traj.states == expected);
    }
}

TEST_CASE("identical seeds reproduce, different seeds diverge") {
    std::mt19937_64 rng(89);
    const StochasticTensor t = testing::random_positive_tensor(rng, 3, 3);
    const Trajectory a = sample_path(t, {2, 3}, 200, 42);
    const Trajectory b = sample_path(t, {2, 3}, 200, 42);
    const Trajectory c = sample_path(t, {2, 3}, 200, 43);
    CHECK(a.states == b.states);
    CHECK(a.states != c.states);
    CHECK(a.states[0] == 2);
    CHECK(a.states[1] == 3);
}

TEST_CASE("invalid models cannot be sampled") {
    std::vector<double> values(8, 0.0);
    values[0] = 0.5;  // fiber (1,1) sums to 0.5
    values[2] = 1.0;
    values[3] = 0.0;
    values[4] = 1.0;
    values[6] = 0.5;
    values[7] = 0.5;
    const StochasticTensor t(3, 2, std::move(values));
    CHECK_THROWS_AS(sample_path(t, {1, 1}, 10, 0), ModelError);
}

TEST_CASE("bad initial histories and lengths are rejected") {
    const StochasticTensor t = testing::chain_2x2_absorbing();
    CHECK_THROWS_AS(sample_path(t, {1}, 10, 0), ShapeError);
    CHECK_THROWS_AS(sample_path(t, {1, 3}, 10, 0), IndexError);
    CHECK_THROWS_AS(sample_path(t, {1, 1}, 1, 0), ArgumentError);
}

TEST_CASE("empirical distribution counts past the burn-in") {
    const StochasticTensor t = testing::chain_2x2_absorbing();
    const Trajectory traj = sample_path(t, {1, 1}, 100, 5);
    const StateDistribution freq = empirical_distribution(traj, 10);
    CHECK(freq.probs == std::vector<double>{1, 0});
    CHECK_THROWS_AS(empirical_distribution(traj, 100), ArgumentError);
    CHECK_THROWS_AS(empirical_distribution(traj, -1), ArgumentError);
}

TEST_CASE("periodic chain's odd positions concentrate on state 2") {
    const StochasticTensor t = testing::chain_3x3_periodic();
    const Trajectory traj = sample_path(t, {1, 1}, 2001, 777);
    Trajectory odd;
    odd.dim = traj.dim;
    for (std::size_t pos = 3; pos <= traj.states.size(); pos += 2) {
        odd.states.push_back(traj.states[pos - 1]);
    }
    const StateDistribution freq = empirical_distribution(odd, 0);
    CHECK(freq.probs == std::vector<double>{0, 1, 0});
}
