#pragma once

// Symmetric finite point sets in Q^n: type classification, orbit
// decomposition, orbit vectors and the equivalence decision.

#include "symlag/symcore.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symlag {

/// Exact rational coordinates; ordered lexicographically.
using Point = std::vector<Rational>;

inline std::string to_string(const Point& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += to_string(x[i]);
    }
    return s + ")";
}

/// Raised when a set is not closed under coordinate permutations.
class NotSymmetric : public InvalidArgument {
public:
    NotSymmetric(Point witness, Permutation sigma)
        : InvalidArgument("set is not symmetric: " + symlag::to_string(witness) + " is in the set but its image under " +
                          "the permutation with images " + images_string(sigma) + " is not"),
          witness_(std::move(witness)), sigma_(std::move(sigma)) {}

    const Point& witness() const noexcept { return witness_; }
    const Permutation& permutation() const noexcept { return sigma_; }

private:
    static std::string images_string(const Permutation& p) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.n(); ++i) s += (i ? "," : "") + std::to_string(p.images()[i]);
        return s + "]";
    }

    Point witness_;
    Permutation sigma_;
};

class DuplicatePoint : public InvalidArgument {
public:
    explicit DuplicatePoint(Point p)
        : InvalidArgument("duplicate point " + symlag::to_string(p)), point_(std::move(p)) {}
    const Point& point() const noexcept { return point_; }

private:
    Point point_;
};

/// c_i = number of distinct coordinate values occurring exactly i times.
inline OrbitType classify_point(const Point& x) {
    if (x.empty()) throw InvalidArgument("point must have at least one coordinate");
    std::map<Rational, std::size_t> mult;
    for (const auto& v : x) ++mult[v];
    std::vector<std::size_t> counts(x.size(), 0);
    for (const auto& [value, m] : mult) ++counts[m - 1];
    return OrbitType(std::move(counts));
}

/// All distinct coordinate permutations of x, sorted.
inline std::vector<Point> expand_orbit(const Point& x) {
    Point p = x;
    std::sort(p.begin(), p.end());
    std::vector<Point> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Some sigma with apply_to_point(sigma, from) == to. Requires equal
/// coordinate multisets.
inline Permutation permutation_mapping(const Point& from, const Point& to) {
    if (from.size() != to.size()) throw DimensionMismatch("points of different dimension");
    std::vector<std::size_t> images(from.size());
    std::vector<bool> used(from.size(), false);
    for (std::size_t i = 0; i < to.size(); ++i) {
        std::size_t j = 0;
        while (j < from.size() && (used[j] || from[j] != to[i])) ++j;
        if (j == from.size()) throw InvalidArgument("points are not in the same orbit");
        used[j] = true;
        images[i] = j + 1;
    }
    return Permutation(std::move(images));
}

/// The point of x's orbit in canonical block order: values occurring once
/// (ascending), then values occurring twice, and so on.
inline Point canonical_arrangement(const Point& x) {
    std::map<Rational, std::size_t> mult;
    for (const auto& v : x) ++mult[v];
    std::vector<std::pair<std::size_t, Rational>> blocks;
    for (const auto& [value, m] : mult) blocks.emplace_back(m, value);
    std::sort(blocks.begin(), blocks.end());
    Point out;
    out.reserve(x.size());
    for (const auto& [m, value] : blocks) out.insert(out.end(), m, value);
    return out;
}

struct PointOrbit {
    OrbitType type;
    /// canonical_arrangement of any member
    Point representative;
    std::vector<Point> points;
};

/// Distinct points closed under S_n, with their orbit decomposition.
/// Obtained only through validate_symmetric.
class NodeSet {
public:
    std::size_t n() const noexcept { return n_; }
    /// Sorted lexicographically.
    const std::vector<Point>& points() const noexcept { return points_; }
    /// Orbits in order of their lexicographically smallest point.
    const std::vector<PointOrbit>& orbits() const noexcept { return orbits_; }
    std::size_t size() const noexcept { return points_.size(); }

    bool contains(const Point& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

    friend NodeSet validate_symmetric(std::size_t n, std::vector<Point> pts);

private:
    std::size_t n_ = 0;
    std::vector<Point> points_;
    std::vector<PointOrbit> orbits_;
};

/// Checks distinctness and closure, and decomposes into orbits greedily in
/// lexicographic order. Closure is checked by walking each orbit with the
/// adjacent transpositions, so the reported witness is a transposition.
inline NodeSet validate_symmetric(std::size_t n, std::vector<Point> pts) {
    if (n == 0) throw InvalidArgument("dimension n must be at least 1");
    for (const auto& p : pts)
        if (p.size() != n)
            throw DimensionMismatch("point " + to_string(p) + " does not have " + std::to_string(n) + " coordinates");
    std::sort(pts.begin(), pts.end());
    if (auto dup = std::adjacent_find(pts.begin(), pts.end()); dup != pts.end()) throw DuplicatePoint(*dup);

    NodeSet s;
    s.n_ = n;
    s.points_ = std::move(pts);
    const auto gens = symmetric_group_generators(n);
    std::vector<bool> assigned(s.points_.size(), false);
    auto index_of = [&](const Point& x) -> std::optional<std::size_t> {
        auto it = std::lower_bound(s.points_.begin(), s.points_.end(), x);
        if (it == s.points_.end() || *it != x) return std::nullopt;
        return static_cast<std::size_t>(it - s.points_.begin());
    };
    for (std::size_t start = 0; start < s.points_.size(); ++start) {
        if (assigned[start]) continue;
        std::vector<std::size_t> members{start};
        assigned[start] = true;
        for (std::size_t k = 0; k < members.size(); ++k) {
            const Point& z = s.points_[members[k]];
            for (const auto& g : gens) {
                auto idx = index_of(apply_to_point(g, z));
                if (!idx) throw NotSymmetric(z, g);
                if (!assigned[*idx]) {
                    assigned[*idx] = true;
                    members.push_back(*idx);
                }
            }
        }
        std::sort(members.begin(), members.end());
        PointOrbit orbit{classify_point(s.points_[start]), canonical_arrangement(s.points_[start]), {}};
        for (std::size_t idx : members) orbit.points.push_back(s.points_[idx]);
        if (orbit_size(orbit.type) != orbit.points.size())
            throw InternalError("orbit size disagrees with its type");
        s.orbits_.push_back(std::move(orbit));
    }
    return s;
}

inline NodeSet validate_symmetric(std::vector<Point> pts) {
    if (pts.empty()) throw InvalidArgument("cannot infer the dimension of an empty point set");
    const std::size_t n = pts.front().size();
    return validate_symmetric(n, std::move(pts));
}

/// Union of the orbits of the given representatives.
inline std::vector<Point> symmetric_closure(const std::vector<Point>& reps) {
    std::set<Point> all;
    for (const auto& r : reps)
        for (auto& p : expand_orbit(r)) all.insert(std::move(p));
    return {all.begin(), all.end()};
}

/// Orbit counts per type, in descending type order.
struct OrbitVector {
    std::size_t n = 0;
    std::vector<std::size_t> counts;

    /// Total number of points sum_i counts[i] * orbit_size(type_i).
    BigInt total_points() const {
        const auto order = enumerate_types(n);
        BigInt total = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) total += orbit_size(order[i]) * counts[i];
        return total;
    }

    std::size_t total_orbits() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

    friend bool operator==(const OrbitVector&, const OrbitVector&) = default;
};

inline OrbitVector orbit_vector_from_types(std::size_t n, const std::vector<OrbitType>& types) {
    const auto order = enumerate_types(n);
    OrbitVector v{n, std::vector<std::size_t>(order.size(), 0)};
    for (const auto& t : types) ++v.counts[type_index(t, order).rank - 1];
    return v;
}

inline OrbitVector orbit_vector(const NodeSet& s) {
    std::vector<OrbitType> types;
    for (const auto& o : s.orbits()) types.push_back(o.type);
    return orbit_vector_from_types(s.n(), types);
}

struct Equivalence {
    bool equivalent = false;
    OrbitVector first;
    OrbitVector second;
    /// Equivariant bijection as (x, f(x)) pairs sorted by x; set when equivalent.
    std::optional<std::vector<std::pair<Point, Point>>> bijection;
};

/// Equivalent iff the orbit vectors agree. The witness sends sigma.r1 to
/// sigma.r2, where r1 and r2 are the canonical representatives of two
/// matched orbits of the same type; equal types give equal stabilizers, so
/// the map does not depend on the choice of sigma.
inline Equivalence equivalent(const NodeSet& a, const NodeSet& b) {
    if (a.n() != b.n()) throw DimensionMismatch("node sets live in different dimensions");
    Equivalence e{false, orbit_vector(a), orbit_vector(b), std::nullopt};
    if (e.first != e.second) return e;
    e.equivalent = true;
    std::map<OrbitType, std::vector<const PointOrbit*>, std::greater<>> pending;
    for (const auto& o : b.orbits()) pending[o.type].push_back(&o);
    std::map<OrbitType, std::size_t, std::greater<>> used;
    std::vector<std::pair<Point, Point>> f;
    for (const auto& o : a.orbits()) {
        const PointOrbit* target = pending.at(o.type).at(used[o.type]++);
        for (const auto& x : o.points) {
            const Permutation sigma = permutation_mapping(o.representative, x);
            f.emplace_back(x, apply_to_point(sigma, target->representative));
        }
    }
    std::sort(f.begin(), f.end());
    e.bijection = std::move(f);
    return e;
}

/// Union-find over indices 0..size-1.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t size) : parent_(size), components_(size) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent_[b] = a;
        --components_;
    }

    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t components_;
};

/// Orbits of `items` under the group generated by `gens`; `act(g, item)`
/// must return an element of `items` (sorted).
template <class Item, class Act>
std::size_t count_orbits(const std::vector<Item>& items, const std::vector<Permutation>& gens, Act&& act) {
    DisjointSets sets(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (const auto& g : gens) {
            auto image = act(g, items[i]);
            auto it = std::lower_bound(items.begin(), items.end(), image);
            if (it == items.end() || !(*it == image)) throw InvalidArgument("set is not closed under the group");
            sets.unite(i, static_cast<std::size_t>(it - items.begin()));
        }
    }
    return sets.components();
}

/// Orbits of s under the stabilizer of canonical_point(t).
inline std::size_t subgroup_orbit_count(const NodeSet& s, const OrbitType& t, std::size_t limit = kDefaultEnumLimit) {
    if (s.n() != t.n()) throw DimensionMismatch("type and node set dimensions differ");
    if (t.n() > limit) throw CapacityError(t.n(), limit);
    return count_orbits(s.points(), stabilizer_generators(t),
                        [](const Permutation& g, const Point& x) { return apply_to_point(g, x); });
}

/// Outcome of snapping one decimal coordinate to a rational.
struct Snap {
    std::string text;
    Rational exact;
    Rational value;
    Rational error() const { return abs(value - exact); }
};

/// Simplest continued-fraction convergent of `exact` within `tol`.
inline Rational snap_rational(const Rational& exact, const Rational& tol) {
    if (tol <= 0) throw InvalidArgument("snapping tolerance must be positive");
    // convergents h/k of the continued fraction expansion
    BigInt h_prev = 1, h = 0, k_prev = 0, k = 1;
    BigInt num = numerator(exact), den = denominator(exact);
    for (;;) {
        BigInt a = num / den;
        if (num % den != 0 && num < 0) a -= 1;  // floor
        BigInt h_next = a * h_prev + h, k_next = a * k_prev + k;
        h = h_prev;
        k = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        const Rational approx(h_prev, k_prev);
        if (abs(approx - exact) <= tol) return approx;
        BigInt rem = num - a * den;
        if (rem == 0) return approx;
        num = den;
        den = rem;
    }
}

}  // namespace symlag
