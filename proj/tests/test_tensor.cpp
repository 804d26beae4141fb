#include <doctest.h>

#include <random>

#include "homc/tensor.hpp"
#include "support/oracles.hpp"

using namespace homc;

TEST_CASE("bundled models validate") {
    CHECK(validate(testing::chain_2x2_absorbing()).valid());
    CHECK(validate(testing::chain_3x3_periodic()).valid());
    CHECK(validate(testing::chain_4x4_regular()).valid());
}

TEST_CASE("an all-zero tensor reports every fiber") {
    const StochasticTensor zero(3, 2, std::vector<double>(8, 0.0));
    const ValidationReport report = validate(zero);
    CHECK_FALSE(report.valid());
    CHECK(report.fiber_violations.size() == 4);
    for (const auto& v : report.fiber_violations) CHECK(v.sum == 0.0);
}

TEST_CASE("out-of-range entries are reported with their index") {
    std::vector<double> values = {1.2, -0.2, 0.5, 0.5, 0.5, 0.5, 0.0, 1.0};
    const StochasticTensor t(3, 2, std::move(values));
    const ValidationReport report = validate(t);
    CHECK_FALSE(report.valid());
    REQUIRE(report.entry_violations.size() == 2);
    CHECK(report.entry_violations[0].index == MultiIndex{1, 1, 1});
    CHECK(report.entry_violations[0].value == 1.2);
    CHECK(report.entry_violations[1].index == MultiIndex{2, 1, 1});
}

TEST_CASE("wrong value count is a shape error") {
    CHECK_THROWS_AS(StochasticTensor(3, 2, std::vector<double>(7, 0.0)), ShapeError);
}

TEST_CASE("identity tensor") {
    SUBCASE("order 2 is the identity matrix") {
        const StochasticTensor id = identity_tensor(2, 3);
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                CHECK(id.at({i, j}) == (i == j ? 1.0 : 0.0));
            }
        }
    }
    SUBCASE("order 3 has identical identity slices") {
        const StochasticTensor id = identity_tensor(3, 2);
        for (int k = 1; k <= 2; ++k) {
            for (int i = 1; i <= 2; ++i) {
                for (int j = 1; j <= 2; ++j) {
                    CHECK(id.at({i, j, k}) == (i == j ? 1.0 : 0.0));
                }
            }
        }
    }
    SUBCASE("matricization is repeated identity blocks") {
        const Matrix p0 = matricize(identity_tensor(4, 2));
        REQUIRE(p0.rows() == 2);
        REQUIRE(p0.cols() == 8);
        for (std::int64_t block = 0; block < 4; ++block) {
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    CHECK(p0.at(r, block * 2 + c) == (r == c ? 1.0 : 0.0));
                }
            }
        }
    }
    SUBCASE("validates and respects caps") {
        CHECK(validate(identity_tensor(3, 4)).valid());
        Caps tight;
        tight.max_entries = 10;
        CHECK_THROWS_AS(identity_tensor(3, 4, tight), CapacityError);
    }
}

TEST_CASE("matricization layout") {
    SUBCASE("order-4 column positions") {
        std::vector<double> values(16, 0.0);
        // Distinct markers at (1,1,1,1), (1,2,1,1), (1,2,2,2).
        values[to_linear({1, 1, 1, 1}, 2) - 1] = 0.125;
        values[to_linear({1, 2, 1, 1}, 2) - 1] = 0.25;
        values[to_linear({1, 2, 2, 2}, 2) - 1] = 0.375;
        const StochasticTensor t(4, 2, std::move(values));
        const Matrix p = matricize(t);
        CHECK(p.at(0, 0) == 0.125);
        CHECK(p.at(0, 1) == 0.25);
        CHECK(p.at(0, 7) == 0.375);
    }
    SUBCASE("order 2 equals the tensor's own matrix") {
        const StochasticTensor t(2, 2, {0.25, 0.75, 0.5, 0.5});
        const Matrix p = matricize(t);
        CHECK(p.at(0, 0) == 0.25);
        CHECK(p.at(1, 0) == 0.75);
        CHECK(p.at(0, 1) == 0.5);
        CHECK(p.at(1, 1) == 0.5);
    }
    SUBCASE("absorbing 2x2 chain matricizes to the known 2x4 matrix") {
        const Matrix p = matricize(testing::chain_2x2_absorbing());
        const std::vector<double> row0 = {1, 0.5, 0.5, 0};
        const std::vector<double> row1 = {0, 0.5, 0.5, 1};
        for (int c = 0; c < 4; ++c) {
            CHECK(p.at(0, c) == row0[static_cast<std::size_t>(c)]);
            CHECK(p.at(1, c) == row1[static_cast<std::size_t>(c)]);
        }
    }
}

TEST_CASE("matricize round-trips bit-identically") {
    std::mt19937_64 rng(7);
    for (int m : {2, 3, 4}) {
        for (int n : {2, 3}) {
            const StochasticTensor t = testing::random_positive_tensor(rng, m, n);
            const StochasticTensor back = testing::dematricize(matricize(t), m, n);
            CHECK(back == t);
        }
    }
}

TEST_CASE("matricization columns of valid tensors sum to one") {
    std::mt19937_64 rng(11);
    const StochasticTensor t = testing::random_positive_tensor(rng, 3, 3);
    const Matrix p = matricize(t);
    for (std::int64_t c = 0; c < p.cols(); ++c) {
        double sum = 0.0;
        for (std::int64_t r = 0; r < p.rows(); ++r) sum += p.at(r, c);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("fiber extraction") {
    const StochasticTensor periodic = testing::chain_3x3_periodic();
    CHECK(periodic.fiber({1, 1}) == std::vector<double>{0, 1, 0});
    CHECK(periodic.fiber({2, 1}) == std::vector<double>{0.5, 0, 0.5});
    CHECK(identity_tensor(3, 2).fiber({2, 1}) == std::vector<double>{0, 1});
    CHECK_THROWS_AS(periodic.fiber({4, 1}), IndexError);
    CHECK_THROWS_AS(periodic.fiber({1, 1, 1}), ShapeError);
}
