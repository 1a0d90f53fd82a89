#include "oracles.hpp"
#include "symlag/symcore.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symlag;

namespace {

using Point = std::vector<Rational>;

OrbitType T(std::vector<std::size_t> c) { return OrbitType(std::move(c)); }

Point P(std::initializer_list<long> v) {
    Point x;
    for (long a : v) x.emplace_back(a);
    return x;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{1});
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("permutation construction rejects non-bijections") {
    CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{1, 4, 2}), InvalidArgument);
    CHECK_THROWS_AS(Permutation(std::size_t{0}), InvalidArgument);
    CHECK(Permutation(std::vector<std::size_t>{2, 3, 1}).inverse() == Permutation(std::vector<std::size_t>{3, 1, 2}));
}

TEST_CASE("enumerate_types lists the Diophantine solutions in descending order") {
    CHECK(enumerate_types(3) == std::vector{T({0, 0, 1}), T({1, 1, 0}), T({3, 0, 0})});
    CHECK(enumerate_types(1) == std::vector{T({1})});
    CHECK(enumerate_types(5).size() == 7);
    CHECK_THROWS_AS(enumerate_types(0), InvalidArgument);

    const auto p = oracle::partition_numbers(12);
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto types = enumerate_types(n);
        CHECK(types.size() == oracle::all_type_tuples(n).size());
        CHECK(types.size() == static_cast<std::size_t>(p[n]));
        CHECK(types.size() > previous);
        previous = types.size();
        for (std::size_t i = 0; i + 1 < types.size(); ++i) CHECK(types[i] > types[i + 1]);
    }
}

TEST_CASE("compare_types is a strict total order") {
    CHECK(compare_types(T({0, 0, 1}), T({1, 1, 0})) == std::strong_ordering::greater);
    CHECK(compare_types(T({1, 1, 0}), T({1, 1, 0})) == std::strong_ordering::equal);
    CHECK(compare_types(T({1, 2, 0, 0, 0}), T({3, 1, 0, 0, 0})) == std::strong_ordering::greater);
    CHECK_THROWS_AS(compare_types(T({1}), T({2, 0})), DimensionMismatch);

    for (std::size_t n = 1; n <= 7; ++n) {
        const auto ts = enumerate_types(n);
        for (const auto& a : ts)
            for (const auto& b : ts) {
                const auto ab = a <=> b;
                CHECK((ab == 0) == (a == b));
                CHECK((b <=> a) == (0 <=> ab));
                for (const auto& c : ts)
                    if (a > b && b > c) CHECK(a > c);
            }
    }
}

TEST_CASE("cycle_type counts cycles of each length") {
    CHECK(cycle_type(Permutation::identity(3)) == T({3, 0, 0}));
    CHECK(cycle_type(Permutation::transposition(3, 1, 2)) == T({1, 1, 0}));
    CHECK(cycle_type(Permutation(std::vector<std::size_t>{2, 3, 1, 4, 6, 5})) == T({1, 1, 1, 0, 0, 0}));
}

TEST_CASE("apply_to_point permutes coordinates") {
    const Point x = P({7, 8, 9});
    CHECK(apply_to_point(Permutation::identity(3), x) == x);
    CHECK(apply_to_point(Permutation::transposition(3, 1, 2), P({4, 4, 5})) == P({4, 4, 5}));
    CHECK(apply_to_point(Permutation(std::vector<std::size_t>{2, 3, 1}), x) == P({8, 9, 7}));
    CHECK_THROWS_AS(apply_to_point(Permutation::identity(2), x), DimensionMismatch);
}

TEST_CASE("apply_to_point satisfies the action axioms") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> v(-3, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const auto s = random_permutation(n, rng), t = random_permutation(n, rng);
        Point x(n);
        for (auto& c : x) c = Rational(v(rng), 1 + trial % 3);
        CHECK(apply_to_point(Permutation::identity(n), x) == x);
        CHECK(apply_to_point(s * t, x) == apply_to_point(s, apply_to_point(t, x)));
        CHECK(apply_to_point(s.inverse(), apply_to_point(s, x)) == x);
    }
}

TEST_CASE("stabilizer_order and orbit_size") {
    CHECK(stabilizer_order(T({0, 0, 1})) == 6);
    CHECK(stabilizer_order(T({3, 0, 0})) == 1);
    CHECK(stabilizer_order(T({1, 1, 0})) == 2);
    CHECK(orbit_size(T({0, 0, 1})) == 1);
    CHECK(orbit_size(T({1, 1, 0})) == 3);
    CHECK(orbit_size(T({3, 0, 0})) == 6);
    CHECK(orbit_size(T({0, 2, 0, 0})) == 6);
    CHECK(orbit_size(T({6, 0, 0, 0, 0, 0})) == 720);

    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_types(n)) CHECK(orbit_size(t) * stabilizer_order(t) == factorial(n));
    // against direct enumeration of the orbit
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_types(n))
            CHECK(orbit_size(t) == oracle::full_orbit(oracle::block_point(t.counts())).size());
}

TEST_CASE("canonical_point lays out blocks singletons first") {
    CHECK(canonical_point(T({1, 1, 0})) == P({1, 2, 2}));
    CHECK(canonical_point(T({0, 0, 1})) == P({1, 1, 1}));
    CHECK(canonical_point(T({3, 0, 0})) == P({1, 2, 3}));
    CHECK(canonical_point(T({0, 2, 1, 0, 0, 0, 0})) == P({1, 1, 2, 2, 3, 3, 3}));
}

TEST_CASE("stabilizer_elements enumerates the point stabilizer") {
    CHECK(stabilizer_elements(T({3, 0, 0})) == std::vector{Permutation::identity(3)});
    CHECK(stabilizer_elements(T({0, 0, 1})).size() == 6);
    CHECK(stabilizer_elements(T({1, 1, 0})) ==
          std::vector{Permutation::identity(3), Permutation::transposition(3, 2, 3)});
    CHECK_THROWS_AS(stabilizer_elements(T({3, 0, 0}), 2), CapacityError);
    CHECK_THROWS_AS(stabilizer_elements(T({11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), CapacityError);

    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& t : enumerate_types(n)) {
            const auto h = stabilizer_elements(t);
            CHECK(h.size() == stabilizer_order(t));
            const auto x = canonical_point(t);
            for (const auto& s : h) CHECK(apply_to_point(s, x) == x);
        }
    }
}

TEST_CASE("fixing a point is the same as every cycle staying inside one value block") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& t : enumerate_types(n)) {
            const auto x = canonical_point(t);
            const auto h = stabilizer_elements(t);
            for (const auto& s : all_permutations(n)) {
                bool cycles_in_blocks = true;
                std::vector<bool> seen(n + 1, false);
                for (std::size_t start = 1; start <= n; ++start) {
                    for (std::size_t i = start; !seen[i]; i = s(i)) {
                        seen[i] = true;
                        if (x[i - 1] != x[start - 1]) cycles_in_blocks = false;
                    }
                }
                CHECK(cycles_in_blocks == (apply_to_point(s, x) == x));
                CHECK(cycles_in_blocks == std::binary_search(h.begin(), h.end(), s));
            }
        }
    }
}

TEST_CASE("stabilizer generators generate the stabilizer") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& t : enumerate_types(n)) {
            const auto gens = stabilizer_generators(t);
            std::set<Permutation> group{Permutation::identity(n)};
            std::vector<Permutation> frontier{Permutation::identity(n)};
            while (!frontier.empty()) {
                auto g = frontier.back();
                frontier.pop_back();
                for (const auto& s : gens)
                    if (group.insert(g * s).second) frontier.push_back(g * s);
            }
            const auto h = stabilizer_elements(t);
            CHECK(std::vector<Permutation>(group.begin(), group.end()) == h);
        }
    }
}

TEST_CASE("orbit type invariants are enforced") {
    CHECK_THROWS_AS(OrbitType({1, 1}), InvalidArgument);
    CHECK_THROWS_AS(OrbitType(std::vector<std::size_t>{}), InvalidArgument);
    CHECK(type_index(T({1, 1, 0})).rank == 2);
    CHECK(type_index(T({1, 1, 0})).c == 3);
}
