#pragma once

// Permutation characters of S_n on the orbit classes of R^n: the fixed-point
// table K, conjugacy class sizes, and the Gram matrix V of inner products.
//
// Index order is always the descending type order of enumerate_types(n).
// chi_i vanishes on every class whose type exceeds type_i, so K is upper
// triangular in that order and lower triangular when both indices run in
// ascending type order (KMatrix::ascending()).

#include "symlag/linalg.hpp"
#include "symlag/symcore.hpp"

#include <map>
#include <set>
#include <vector>

namespace symlag {

/// n! / prod_i (i^{c_i} c_i!), the number of permutations of cycle type t.
inline BigInt class_size(const OrbitType& t) {
    BigInt denom = 1;
    for (std::size_t i = 1; i <= t.n(); ++i) {
        for (std::size_t k = 0; k < t.count(i); ++k) denom *= i;
        denom *= factorial(t.count(i));
    }
    return factorial(t.n()) / denom;
}

namespace detail {

/// Ways to hand each cycle (cycles of equal length are distinct objects) to
/// one of the value blocks so that every block's cycle lengths sum to its
/// size. Blocks are processed in order; state is the remaining cycle multiset.
class FixedPointCounter {
public:
    FixedPointCounter(const OrbitType& orbit, const OrbitType& sigma)
        : blocks_(orbit.block_sizes()), n_(orbit.n()) {
        if (orbit.n() != sigma.n()) throw DimensionMismatch("orbit type and cycle type have different n");
        cycles_ = sigma.counts();
    }

    BigInt count() { return from_block(0, cycles_); }

private:
    using State = std::vector<std::size_t>;

    BigInt from_block(std::size_t b, const State& remaining) {
        if (b == blocks_.size()) return 1;
        auto key = std::make_pair(b, remaining);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        State rest = remaining;
        BigInt total = 0;
        fill_block(b, blocks_[b], n_, rest, BigInt(1), total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    // Pick how many cycles of each length <= max_len go into block b, with
    // lengths summing to `need`; lengths are tried in decreasing order.
    void fill_block(std::size_t b, std::size_t need, std::size_t max_len, State& rest, const BigInt& ways,
                    BigInt& total) {
        if (need == 0) {
            total += ways * from_block(b + 1, rest);
            return;
        }
        for (std::size_t len = std::min(need, max_len); len >= 1; --len) {
            const std::size_t avail = rest[len - 1];
            const std::size_t max_take = std::min(avail, need / len);
            for (std::size_t take = 1; take <= max_take; ++take) {
                rest[len - 1] = avail - take;
                fill_block(b, need - take * len, len - 1, rest, ways * binomial(avail, take), total);
            }
            rest[len - 1] = avail;
        }
    }

    std::vector<std::size_t> blocks_;
    std::size_t n_;
    State cycles_;
    std::map<std::pair<std::size_t, State>, BigInt> memo_;
};

}  // namespace detail

/// Number of points in an orbit of type `orbit` fixed by a permutation of
/// cycle type `sigma`.
inline BigInt fixed_point_count(const OrbitType& orbit, const OrbitType& sigma) {
    return detail::FixedPointCounter(orbit, sigma).count();
}

/// Square integer table tagged with the type order of its rows and columns.
struct TypeMatrix {
    std::size_t n = 0;
    std::vector<OrbitType> order;
    Matrix<BigInt> entries;

    std::size_t size() const noexcept { return order.size(); }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

/// K[i][j] = chi_i on class j (fixed points of a class-j permutation on the
/// class-i orbit).
struct KMatrix : TypeMatrix {
    /// chi_i is zero on every class of type strictly greater than type_i,
    /// and nonzero on its own class. This is the triangularity that makes K
    /// invertible.
    bool vanishes_above_own_type() const {
        for (std::size_t i = 0; i < size(); ++i) {
            if (entries(i, i) < 1) return false;
            for (std::size_t j = 0; j < size(); ++j)
                if (order[j] > order[i] && entries(i, j) != 0) return false;
        }
        return true;
    }

    /// K re-indexed in ascending type order, where it is lower triangular.
    Matrix<BigInt> ascending() const {
        const std::size_t c = size();
        Matrix<BigInt> out(c, c);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = entries(c - 1 - i, c - 1 - j);
        return out;
    }
};

/// v[i][j] = <chi_i, chi_j>.
struct VMatrix : TypeMatrix {};

inline bool is_lower_triangular(const Matrix<BigInt>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

inline KMatrix k_matrix(std::size_t n) {
    KMatrix k;
    k.n = n;
    k.order = enumerate_types(n);
    const std::size_t c = k.order.size();
    k.entries = Matrix<BigInt>(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) k.entries(i, j) = fixed_point_count(k.order[i], k.order[j]);
    return k;
}

/// V from K by the class-weighted inner product, divided by n! exactly.
inline VMatrix v_matrix(const KMatrix& k) {
    VMatrix v;
    v.n = k.n;
    v.order = k.order;
    const std::size_t c = k.size();
    std::vector<BigInt> sizes;
    sizes.reserve(c);
    for (const auto& t : k.order) sizes.push_back(class_size(t));
    const BigInt group_order = factorial(k.n);
    v.entries = Matrix<BigInt>(c, c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            BigInt s = 0;
            for (std::size_t m = 0; m < c; ++m) s += sizes[m] * k(i, m) * k(j, m);
            if (s % group_order != 0)
                throw InternalError("non-integral character inner product at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
            v.entries(i, j) = s / group_order;
        }
    }
    return v;
}

inline VMatrix v_matrix(std::size_t n) { return v_matrix(k_matrix(n)); }

/// Number of orbits of `group` on `points`, by Burnside: mean fixed-point count.
template <class Pt>
BigInt burnside_orbit_count(const std::vector<Permutation>& group, const std::vector<Pt>& points) {
    if (group.empty()) throw InvalidArgument("group must contain the identity");
    BigInt fixed = 0;
    for (const auto& g : group)
        for (const auto& x : points)
            if (apply_to_point(g, x) == x) ++fixed;
    if (fixed % group.size() != 0) throw InternalError("Burnside count is not an integer");
    return fixed / group.size();
}

/// v[i][j] from explicit enumeration: orbits of the stabilizer of the
/// class-i canonical point acting on the full class-j orbit. Ranks are
/// 1-based in descending type order.
inline BigInt v_entry_burnside(std::size_t i, std::size_t j, std::size_t n, std::size_t limit = kDefaultEnumLimit) {
    if (n > limit) throw CapacityError(n, limit);
    const auto order = enumerate_types(n);
    if (i < 1 || i > order.size() || j < 1 || j > order.size()) throw InvalidArgument("type rank out of range");
    const auto h = stabilizer_elements(order[i - 1], limit);
    const auto rep = canonical_point(order[j - 1]);
    std::set<std::vector<Rational>> orbit;
    for_each_permutation(n, limit, [&](const Permutation& p) { orbit.insert(apply_to_point(p, rep)); });
    return burnside_orbit_count(h, std::vector<std::vector<Rational>>(orbit.begin(), orbit.end()));
}

}  // namespace symlag
