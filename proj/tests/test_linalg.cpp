#include "oracles.hpp"
#include "symlag/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symlag;

TEST_CASE("exact determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (trial % 4 == 0 && j == 0) ? Rational(0) : oracle::random_rational(rng, 5, 3);
        if (trial % 7 == 0 && n > 1)
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 2 * m(0, j);  // force singular
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
}

TEST_CASE("Bareiss handles zero pivots and sign flips") {
    Matrix<BigInt> m{{0, 1}, {1, 0}};
    CHECK(bareiss_determinant(m) == -1);
    Matrix<BigInt> s{{0, 0}, {1, 2}};
    CHECK(bareiss_determinant(s) == 0);
    CHECK(bareiss_determinant(Matrix<BigInt>{}) == 1);
    CHECK_THROWS_AS(bareiss_determinant(Matrix<BigInt>(2, 3)), DimensionMismatch);
}

TEST_CASE("solve returns the unique solution or nullopt") {
    Matrix<Rational> v{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
    auto x = solve(v, {2, 4, 6});
    REQUIRE(x);
    CHECK(*x == std::vector<Rational>{0, 2, 0});
    Matrix<Rational> sing{{1, 2}, {2, 4}};
    CHECK_FALSE(solve(sing, {1, 1}));
}

TEST_CASE("rank and Sylvester's criterion") {
    CHECK(rank(Matrix<Rational>{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(Matrix<Rational>{{0, 0}, {0, 0}}) == 0);
    CHECK(is_positive_definite(Matrix<BigInt>{{2, 1}, {1, 2}}));
    CHECK_FALSE(is_positive_definite(Matrix<BigInt>{{1, 2}, {2, 1}}));
    CHECK_FALSE(is_positive_definite(Matrix<BigInt>{{1, 0}, {1, 1}}));
    CHECK(leading_principal_minors(Matrix<BigInt>{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}}) == std::vector<BigInt>{1, 1, 1});
}

TEST_CASE("floating determinant") {
    const auto d = float_determinant(Matrix<double>{{0.0, 2.0}, {3.0, 1.0}});
    CHECK(d.value == Catch::Approx(-6.0));
    CHECK(d.row_norm_product == Catch::Approx(2.0 * std::sqrt(10.0)));
    CHECK(float_determinant(Matrix<double>{{1.0, 2.0}, {2.0, 4.0}}).value == Catch::Approx(0.0).margin(1e-12));
}
