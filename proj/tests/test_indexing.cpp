#include <doctest.h>

#include "homc/indexing.hpp"

using namespace homc;

TEST_CASE("linear indexing enumerates length-3 binary multi-indices in canonical order") {
    // Positions 1..8 must list 111, 211, 121, 221, 112, 212, 122, 222.
    const std::vector<MultiIndex> expected = {
        {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    for (std::int64_t pos = 1; pos <= 8; ++pos) {
        CHECK(from_linear(pos, 2, 3) == expected[static_cast<std::size_t>(pos - 1)]);
        CHECK(to_linear(expected[static_cast<std::size_t>(pos - 1)], 2) == pos);
    }
}

TEST_CASE("to_linear pins the documented positions") {
    CHECK(to_linear({1, 1, 1}, 2) == 1);
    CHECK(to_linear({2, 1, 1}, 2) == 2);
    CHECK(to_linear({2, 2, 2}, 2) == 8);
    CHECK(to_linear({1}, 3) == 1);
}

TEST_CASE("from_linear pins the documented positions") {
    CHECK(from_linear(3, 2, 3) == MultiIndex{1, 2, 1});
    CHECK(from_linear(8, 2, 3) == MultiIndex{2, 2, 2});
    CHECK(from_linear(1, 5, 2) == MultiIndex{1, 1});
}

TEST_CASE("round trip holds over whole index spaces") {
    for (int n : {1, 2, 3, 5}) {
        for (int length : {1, 2, 3}) {
            const std::int64_t size = checked_pow(n, length, 1 << 20);
            for (std::int64_t pos = 1; pos <= size; ++pos) {
                CHECK(to_linear(from_linear(pos, n, length), n) == pos);
            }
        }
    }
}

TEST_CASE("to_linear is strictly monotone in each component") {
    const int n = 4;
    MultiIndex idx = {2, 3, 1};
    for (std::size_t comp = 0; comp < idx.size(); ++comp) {
        MultiIndex lo = idx;
        MultiIndex hi = idx;
        lo[comp] = 1;
        for (int v = 2; v <= n; ++v) {
            hi[comp] = v;
            CHECK(to_linear(hi, n) > to_linear(lo, n));
            lo[comp] = v;
        }
    }
}

TEST_CASE("invalid components and positions are rejected") {
    CHECK_THROWS_AS(to_linear({0, 1}, 2), IndexError);
    CHECK_THROWS_AS(to_linear({1, 3}, 2), IndexError);
    CHECK_THROWS_AS(from_linear(0, 2, 3), IndexError);
    CHECK_THROWS_AS(from_linear(9, 2, 3), IndexError);
}

TEST_CASE("indexer size is checked, not wrapped") {
    CHECK_THROWS_AS(LinearIndexer(10, 20, Caps{}), CapacityError);  // 10^20 overflows int64
    CHECK_THROWS_AS(LinearIndexer(2, 30, Caps{}), CapacityError);   // 2^30 > default cap
    Caps roomy;
    roomy.max_entries = std::int64_t{1} << 31;
    const LinearIndexer indexer(2, 30, roomy);
    CHECK(indexer.size == (std::int64_t{1} << 30));
}
