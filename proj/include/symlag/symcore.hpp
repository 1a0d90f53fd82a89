#pragma once

// Permutations of {1..n}, orbit/cycle types and their total order, and the
// size formulas for S_n acting on R^n by coordinate permutation.

#include "symlag/exact.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace symlag {

/// A bijection on {1..n}, stored with 1-based images.
///
/// Products read left to right: `(a * b)(i) == b(a(i))`. With the
/// coordinate action `(s.x)_i = x_{s(i)}` this is the convention under
/// which `apply(a * b, x) == apply(a, apply(b, x))`.
class Permutation {
public:
    /// Identity on {1..n}.
    explicit Permutation(std::size_t n) : images_(n) {
        if (n == 0) throw InvalidArgument("permutation dimension must be positive");
        std::iota(images_.begin(), images_.end(), std::size_t{1});
    }

    /// Throws InvalidArgument unless `images` is a bijection on {1..size}.
    explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
        if (images_.empty()) throw InvalidArgument("permutation dimension must be positive");
        std::vector<bool> seen(images_.size() + 1, false);
        for (std::size_t v : images_) {
            if (v < 1 || v > images_.size() || seen[v])
                throw InvalidArgument("permutation images must be a bijection on {1..n}");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) { return Permutation(n); }

    /// The transposition (i j), 1-based.
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        Permutation p(n);
        if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("transposition label out of range");
        std::swap(p.images_[i - 1], p.images_[j - 1]);
        return p;
    }

    /// The cycle c[0] -> c[1] -> ... -> c[0], 1-based labels.
    static Permutation cycle(std::size_t n, std::span<const std::size_t> c) {
        std::vector<std::size_t> images(n);
        std::iota(images.begin(), images.end(), std::size_t{1});
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 1 || c[k] > n) throw InvalidArgument("cycle label out of range");
            images[c[k] - 1] = c[(k + 1) % c.size()];
        }
        return Permutation(std::move(images));
    }

    std::size_t n() const noexcept { return images_.size(); }

    /// sigma(i) for a 1-based label i.
    std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }

    const std::vector<std::size_t>& images() const noexcept { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i + 1) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) throw DimensionMismatch("cannot compose permutations of different degree");
        std::vector<std::size_t> out(a.n());
        for (std::size_t i = 0; i < a.n(); ++i) out[i] = b.images_[a.images_[i] - 1];
        return Permutation(std::move(out));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Composition vector (c_1..c_n) with sum i*c_i == n.
///
/// Describes both the coordinate-equality pattern of a point (c_i classes of
/// i equal coordinates) and the cycle type of a permutation.
class OrbitType {
public:
    explicit OrbitType(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) throw InvalidArgument("orbit type dimension must be positive");
        std::size_t total = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) total += (i + 1) * counts_[i];
        if (total != counts_.size())
            throw InvalidArgument("orbit type counts must satisfy c_1 + 2c_2 + ... + nc_n = n");
    }

    std::size_t n() const noexcept { return counts_.size(); }

    /// c_i for 1 <= i <= n.
    std::size_t count(std::size_t i) const { return counts_.at(i - 1); }

    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    /// Block sizes in canonical order: c_1 ones, then c_2 twos, ...
    std::vector<std::size_t> block_sizes() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], i + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(counts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const OrbitType&, const OrbitType&) = default;

    /// Compares c_n first, then c_{n-1}, down to c_1. Types of different n
    /// are not comparable; use compare_types for a checked comparison.
    friend std::strong_ordering operator<=>(const OrbitType& a, const OrbitType& b) {
        if (a.n() != b.n()) throw DimensionMismatch("cannot order orbit types of different n");
        for (std::size_t k = a.n(); k-- > 0;) {
            if (auto c = a.counts_[k] <=> b.counts_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::size_t> counts_;
};

inline std::strong_ordering compare_types(const OrbitType& a, const OrbitType& b) { return a <=> b; }

/// Position of an orbit type in the descending order, rank 1 being maximal.
struct TypeIndex {
    std::size_t rank;
    std::size_t c;
};

/// All solutions of c_1 + 2c_2 + ... + nc_n = n, in descending type order.
inline std::vector<OrbitType> enumerate_types(std::size_t n) {
    if (n == 0) throw InvalidArgument("dimension n must be at least 1");
    std::vector<OrbitType> out;
    std::vector<std::size_t> counts(n, 0);
    // Choosing c_n first, largest value first, emits the descending order directly.
    auto rec = [&](auto&& self, std::size_t part, std::size_t remaining) -> void {
        if (part == 1) {
            counts[0] = remaining;
            out.emplace_back(counts);
            return;
        }
        for (std::size_t k = remaining / part + 1; k-- > 0;) {
            counts[part - 1] = k;
            self(self, part - 1, remaining - k * part);
        }
        counts[part - 1] = 0;
    };
    rec(rec, n, n);
    return out;
}

/// Rank of `t` in enumerate_types(t.n()).
inline TypeIndex type_index(const OrbitType& t, std::span<const OrbitType> order) {
    auto it = std::lower_bound(order.begin(), order.end(), t, [](const OrbitType& a, const OrbitType& b) {
        return a > b;
    });
    if (it == order.end() || *it != t) throw InvalidArgument("type " + t.to_string() + " not in the order");
    return {static_cast<std::size_t>(it - order.begin()) + 1, order.size()};
}

inline TypeIndex type_index(const OrbitType& t) { return type_index(t, enumerate_types(t.n())); }

inline OrbitType cycle_type(const Permutation& p) {
    std::vector<std::size_t> counts(p.n(), 0);
    std::vector<bool> seen(p.n() + 1, false);
    for (std::size_t start = 1; start <= p.n(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t i = start; !seen[i]; i = p(i)) {
            seen[i] = true;
            ++len;
        }
        ++counts[len - 1];
    }
    return OrbitType(std::move(counts));
}

/// (sigma.x)_i = x_{sigma(i)}.
template <class T>
std::vector<T> apply_to_point(const Permutation& p, std::span<const T> x) {
    if (x.size() != p.n()) throw DimensionMismatch("point and permutation dimensions differ");
    std::vector<T> out;
    out.reserve(x.size());
    for (std::size_t i = 1; i <= p.n(); ++i) out.push_back(x[p(i) - 1]);
    return out;
}

template <class T>
std::vector<T> apply_to_point(const Permutation& p, const std::vector<T>& x) {
    return apply_to_point(p, std::span<const T>(x));
}

/// prod_i (i!)^{c_i}
inline BigInt stabilizer_order(const OrbitType& t) {
    BigInt r = 1;
    for (std::size_t i = 1; i <= t.n(); ++i) {
        const BigInt f = factorial(i);
        for (std::size_t k = 0; k < t.count(i); ++k) r *= f;
    }
    return r;
}

inline BigInt orbit_size(const OrbitType& t) { return factorial(t.n()) / stabilizer_order(t); }

/// Coordinates with block values 1, 2, 3, ... laid out in canonical block
/// order: singletons first, then pairs, then triples, ...
inline std::vector<Rational> canonical_point(const OrbitType& t) {
    std::vector<Rational> x;
    x.reserve(t.n());
    long value = 0;
    for (std::size_t size : t.block_sizes()) {
        ++value;
        x.insert(x.end(), size, Rational(value));
    }
    return x;
}

/// Calls `visit` with every permutation of S_n in lexicographic image order.
/// Throws CapacityError when n exceeds `limit`.
template <class F>
void for_each_permutation(std::size_t n, std::size_t limit, F&& visit) {
    if (n == 0) throw InvalidArgument("dimension n must be at least 1");
    if (n > limit) throw CapacityError(n, limit);
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    do {
        visit(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

inline std::vector<Permutation> all_permutations(std::size_t n, std::size_t limit = kDefaultEnumLimit) {
    std::vector<Permutation> out;
    for_each_permutation(n, limit, [&](Permutation p) { out.push_back(std::move(p)); });
    return out;
}

/// Every sigma in S_n fixing canonical_point(t), by exhaustive filtering.
inline std::vector<Permutation> stabilizer_elements(const OrbitType& t, std::size_t limit = kDefaultEnumLimit) {
    const auto x = canonical_point(t);
    std::vector<Permutation> out;
    for_each_permutation(t.n(), limit, [&](Permutation p) {
        if (apply_to_point(p, x) == x) out.push_back(std::move(p));
    });
    return out;
}

/// Adjacent transpositions inside each canonical block. They generate the
/// stabilizer of canonical_point(t) without enumerating S_n.
inline std::vector<Permutation> stabilizer_generators(const OrbitType& t) {
    std::vector<Permutation> gens;
    std::size_t pos = 1;
    for (std::size_t size : t.block_sizes()) {
        for (std::size_t k = 0; k + 1 < size; ++k) gens.push_back(Permutation::transposition(t.n(), pos + k, pos + k + 1));
        pos += size;
    }
    return gens;
}

/// (1 2), (2 3), ..., (n-1 n); generates S_n.
inline std::vector<Permutation> symmetric_group_generators(std::size_t n) {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
    return gens;
}

}  // namespace symlag
