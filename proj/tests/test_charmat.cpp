#include "oracles.hpp"
#include "symlag/charmat.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symlag;

namespace {

OrbitType T(std::vector<std::size_t> c) { return OrbitType(std::move(c)); }

Matrix<BigInt> M(std::initializer_list<std::initializer_list<BigInt>> rows) { return Matrix<BigInt>(rows); }

}  // namespace

TEST_CASE("class_size counts permutations of a cycle type") {
    CHECK(class_size(T({3, 0, 0})) == 1);
    CHECK(class_size(T({1, 1, 0})) == 3);
    CHECK(class_size(T({0, 0, 1})) == 2);
    for (std::size_t n = 1; n <= 7; ++n) {
        BigInt total = 0;
        std::map<OrbitType, BigInt> by_type;
        for (const auto& t : enumerate_types(n)) total += class_size(t);
        CHECK(total == factorial(n));
        if (n <= 6) {
            for (const auto& p : all_permutations(n)) by_type[cycle_type(p)] += 1;
            for (const auto& t : enumerate_types(n)) CHECK(by_type[t] == class_size(t));
        }
    }
}

TEST_CASE("fixed_point_count") {
    CHECK(fixed_point_count(T({1, 1, 0}), T({3, 0, 0})) == 3);
    CHECK(fixed_point_count(T({1, 1, 0}), T({0, 0, 1})) == 0);
    CHECK(fixed_point_count(T({1, 1, 0}), T({1, 1, 0})) == 1);
    CHECK_THROWS_AS(fixed_point_count(T({1, 1, 0}), T({2, 0})), DimensionMismatch);
}

TEST_CASE("fixed_point_count matches direct counting on explicit orbits") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto types = enumerate_types(n);
        for (const auto& orbit : types)
            for (const auto& sigma : types)
                CHECK(fixed_point_count(orbit, sigma) == oracle::fixed_points(orbit.counts(), sigma.counts()));
    }
}

TEST_CASE("k_matrix") {
    CHECK(k_matrix(1).entries == M({{1}}));
    // rows: orbit classes, columns: conjugacy classes, both descending
    CHECK(k_matrix(3).entries == M({{1, 1, 1}, {0, 1, 3}, {0, 0, 6}}));
    CHECK(k_matrix(4).entries ==
          M({{1, 1, 1, 1, 1}, {0, 1, 0, 2, 4}, {0, 0, 2, 2, 6}, {0, 0, 0, 2, 12}, {0, 0, 0, 0, 24}}));
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto k = k_matrix(n);
        for (std::size_t j = 0; j < k.size(); ++j) CHECK(k(0, j) == 1);
        CHECK(k.vanishes_above_own_type());
        CHECK(is_lower_triangular(k.ascending()));
        // identity column: chi_i(1) is the orbit size
        for (std::size_t i = 0; i < k.size(); ++i) CHECK(k(i, k.size() - 1) == orbit_size(k.order[i]));
    }
}

TEST_CASE("v_matrix") {
    const auto v3 = v_matrix(3);
    CHECK(v3.entries == M({{1, 1, 1}, {1, 2, 3}, {1, 3, 6}}));
    CHECK(determinant(v3.entries) == 1);
    CHECK(v_matrix(1).entries == M({{1}}));
    CHECK(v_matrix(4).entries ==
          M({{1, 1, 1, 1, 1}, {1, 2, 2, 3, 4}, {1, 2, 3, 4, 6}, {1, 3, 4, 7, 12}, {1, 4, 6, 12, 24}}));
}

TEST_CASE("V is a symmetric positive definite Gram matrix with unit first row") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto v = v_matrix(n);
        CHECK(v.entries == v.entries.transposed());
        for (const auto& m : leading_principal_minors(v.entries)) CHECK(m > 0);
        for (std::size_t j = 0; j < v.size(); ++j) {
            CHECK(v(0, j) == 1);
            CHECK(v(j, 0) == 1);
        }
        // diagonal entry of the free orbit is |S_n|
        CHECK(v(v.size() - 1, v.size() - 1) == factorial(n));
    }
    // unimodular for every n checked with the brute-force oracle
    for (std::size_t n = 1; n <= 6; ++n) CHECK(determinant(v_matrix(n).entries) == 1);
}

TEST_CASE("each permutation character has one S_n-orbit") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto k = k_matrix(n);
        for (std::size_t i = 0; i < k.size(); ++i) {
            BigInt s = 0;
            for (std::size_t j = 0; j < k.size(); ++j) s += k(i, j) * class_size(k.order[j]);
            CHECK(s == factorial(n));
        }
    }
}

TEST_CASE("v_entry_burnside") {
    CHECK(v_entry_burnside(1, 1, 3) == 1);
    CHECK(v_entry_burnside(1, 3, 3) == 1);
    CHECK(v_entry_burnside(2, 2, 3) == 2);
    CHECK(v_entry_burnside(3, 2, 3) == 3);
    CHECK_THROWS_AS(v_entry_burnside(1, 1, 4, 3), CapacityError);
    CHECK_THROWS_AS(v_entry_burnside(0, 1, 3), InvalidArgument);
}

TEST_CASE("Burnside counts agree with the character inner products for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto v = v_matrix(n);
        for (std::size_t i = 1; i <= v.size(); ++i)
            for (std::size_t j = 1; j <= v.size(); ++j) CHECK(v_entry_burnside(i, j, n) == v(i - 1, j - 1));
    }
}

TEST_CASE("V entries count stabilizer orbits, checked by closure") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto v = v_matrix(n);
        const auto tuples = enumerate_types(n);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto h = oracle::stabilizer(oracle::block_point(tuples[i].counts()));
            for (std::size_t j = 0; j < v.size(); ++j) {
                const auto orbit = oracle::full_orbit(oracle::block_point(tuples[j].counts()));
                CHECK(oracle::orbits_by_closure(h, {orbit.begin(), orbit.end()}) == v(i, j));
            }
        }
    }
}

TEST_CASE("the counting recursion scales beyond enumeration") {
    const auto v = v_matrix(12);
    CHECK(v.size() == 77);
    CHECK(v(v.size() - 1, v.size() - 1) == factorial(12));
    CHECK(v.entries == v.entries.transposed());
}
