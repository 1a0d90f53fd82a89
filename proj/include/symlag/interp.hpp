#pragma once

// Symmetric polynomial bases, the r-vector and the constraint system V X = r,
// the generalized Vandermonde determinant, and the necessary-condition screen.

#include "symlag/charmat.hpp"
#include "symlag/linalg.hpp"
#include "symlag/nodeset.hpp"
#include "symlag/polynomial.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symlag {

class NotSymmetricBasis : public InvalidArgument {
public:
    NotSymmetricBasis(Polynomial witness, Permutation sigma)
        : InvalidArgument("basis is not symmetric: image of " + witness.to_string() + " under the permutation " +
                          images_string(sigma) + " is " + act_on_function(sigma, witness).to_string() +
                          ", which is not in the set"),
          witness_(std::move(witness)), sigma_(std::move(sigma)) {}

    const Polynomial& witness() const noexcept { return witness_; }
    const Permutation& permutation() const noexcept { return sigma_; }

private:
    static std::string images_string(const Permutation& p) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.n(); ++i) s += (i ? "," : "") + std::to_string(p.images()[i]);
        return s + "]";
    }

    Polynomial witness_;
    Permutation sigma_;
};

class DuplicateFunction : public InvalidArgument {
public:
    explicit DuplicateFunction(const Polynomial& f) : InvalidArgument("duplicate basis function " + f.to_string()) {}
};

class SizeMismatch : public InvalidArgument {
public:
    SizeMismatch(std::size_t functions, std::size_t points)
        : InvalidArgument(std::to_string(functions) + " basis functions but " + std::to_string(points) + " nodes"),
          functions_(functions), points_(points) {}
    std::size_t functions() const noexcept { return functions_; }
    std::size_t points() const noexcept { return points_; }

private:
    std::size_t functions_;
    std::size_t points_;
};

struct FunctionOrbit {
    std::vector<Polynomial> functions;
    /// Orbit class of R^n this orbit is equivalent to, when there is one.
    std::optional<OrbitType> point_type;
};

/// Distinct polynomials closed under variable permutations, with their S_n
/// orbit decomposition. Obtained only through validate_symmetric_basis.
class BasisSet {
public:
    std::size_t n() const noexcept { return n_; }
    /// Sorted by canonical term order.
    const std::vector<Polynomial>& functions() const noexcept { return functions_; }
    const std::vector<FunctionOrbit>& orbits() const noexcept { return orbits_; }
    std::size_t size() const noexcept { return functions_.size(); }

    /// True when every S_n-orbit is equivalent to some orbit class of R^n.
    bool orbits_realizable() const {
        return std::all_of(orbits_.begin(), orbits_.end(), [](const auto& o) { return o.point_type.has_value(); });
    }

    /// Orbit vector of the basis itself; only defined when orbits_realizable().
    std::optional<OrbitVector> orbit_vector() const {
        if (!orbits_realizable()) return std::nullopt;
        std::vector<OrbitType> types;
        for (const auto& o : orbits_) types.push_back(*o.point_type);
        return orbit_vector_from_types(n_, types);
    }

    friend BasisSet validate_symmetric_basis(std::size_t n, std::vector<Polynomial> fs);

private:
    std::size_t n_ = 0;
    std::vector<Polynomial> functions_;
    std::vector<FunctionOrbit> orbits_;
};

/// The orbit of f is S_n / Stab(f). Transpositions fixing f partition the
/// variables into blocks whose Young subgroup Y lies in Stab(f); the orbit
/// matches a point class exactly when Stab(f) == Y, i.e. when
/// |orbit| * |Y| == n!. The class is then given by the block sizes.
inline std::optional<OrbitType> function_orbit_type(const Polynomial& f, std::size_t orbit_size) {
    const std::size_t n = f.n();
    DisjointSets blocks(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (act_on_function(Permutation::transposition(n, i, j), f) == f) blocks.unite(i - 1, j - 1);
    std::vector<std::size_t> block_size(n, 0);
    for (std::size_t i = 0; i < n; ++i) ++block_size[blocks.find(i)];
    std::vector<std::size_t> counts(n, 0);
    BigInt young = 1;
    for (std::size_t s : block_size) {
        if (s == 0) continue;
        ++counts[s - 1];
        young *= factorial(s);
    }
    if (young * orbit_size != factorial(n)) return std::nullopt;
    return OrbitType(std::move(counts));
}

/// Verifies closure under variable permutations (adjacent transpositions
/// suffice) and splits the set into S_n-orbits.
inline BasisSet validate_symmetric_basis(std::size_t n, std::vector<Polynomial> fs) {
    if (n == 0) throw InvalidArgument("dimension n must be at least 1");
    for (const auto& f : fs)
        if (f.n() != n) throw DimensionMismatch("basis function " + f.to_string() + " has the wrong dimension");
    std::sort(fs.begin(), fs.end());
    if (auto dup = std::adjacent_find(fs.begin(), fs.end()); dup != fs.end()) throw DuplicateFunction(*dup);

    BasisSet b;
    b.n_ = n;
    b.functions_ = std::move(fs);
    const auto gens = symmetric_group_generators(n);
    std::vector<bool> assigned(b.functions_.size(), false);
    auto index_of = [&](const Polynomial& f) -> std::optional<std::size_t> {
        auto it = std::lower_bound(b.functions_.begin(), b.functions_.end(), f);
        if (it == b.functions_.end() || !(*it == f)) return std::nullopt;
        return static_cast<std::size_t>(it - b.functions_.begin());
    };
    for (std::size_t start = 0; start < b.functions_.size(); ++start) {
        if (assigned[start]) continue;
        std::vector<std::size_t> members{start};
        assigned[start] = true;
        for (std::size_t k = 0; k < members.size(); ++k) {
            const Polynomial& f = b.functions_[members[k]];
            for (const auto& g : gens) {
                auto idx = index_of(act_on_function(g, f));
                if (!idx) throw NotSymmetricBasis(f, g);
                if (!assigned[*idx]) {
                    assigned[*idx] = true;
                    members.push_back(*idx);
                }
            }
        }
        std::sort(members.begin(), members.end());
        FunctionOrbit orbit;
        for (std::size_t idx : members) orbit.functions.push_back(b.functions_[idx]);
        orbit.point_type = function_orbit_type(orbit.functions.front(), orbit.functions.size());
        b.orbits_.push_back(std::move(orbit));
    }
    return b;
}

/// Orbits of the basis under the stabilizer of canonical_point(t).
inline std::size_t basis_orbit_count_under_stabilizer(const BasisSet& b, const OrbitType& t,
                                                      std::size_t limit = kDefaultEnumLimit) {
    if (b.n() != t.n()) throw DimensionMismatch("type and basis dimensions differ");
    if (t.n() > limit) throw CapacityError(t.n(), limit);
    return count_orbits(b.functions(), stabilizer_generators(t),
                        [](const Permutation& g, const Polynomial& f) { return act_on_function(g, f); });
}

/// r_i = number of basis orbits under the class-i stabilizer, descending type order.
inline std::vector<std::size_t> r_vector(const BasisSet& b, std::size_t limit = kDefaultEnumLimit) {
    std::vector<std::size_t> r;
    for (const auto& t : enumerate_types(b.n())) r.push_back(basis_orbit_count_under_stabilizer(b, t, limit));
    return r;
}

/// V X = r solved exactly.
struct ConstraintSystem {
    VMatrix v;
    std::vector<std::size_t> r;
    std::vector<Rational> solution;

    /// All entries are non-negative integers, so the solution is an orbit vector.
    bool admissible() const {
        return std::all_of(solution.begin(), solution.end(), [](const Rational& q) { return q >= 0 && is_integer(q); });
    }

    std::optional<OrbitVector> orbit_vector() const {
        if (!admissible()) return std::nullopt;
        OrbitVector x{v.n, {}};
        for (const auto& q : solution) x.counts.push_back(numerator(q).convert_to<std::size_t>());
        return x;
    }
};

inline ConstraintSystem solve_constraints(const VMatrix& v, const std::vector<std::size_t>& r) {
    const std::size_t c = v.size();
    if (r.size() != c) throw DimensionMismatch("r has " + std::to_string(r.size()) + " entries, V is " +
                                               std::to_string(c) + "x" + std::to_string(c));
    Matrix<Rational> a(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = Rational(v(i, j));
    std::vector<Rational> rhs(r.begin(), r.end());
    auto x = solve(std::move(a), std::move(rhs));
    if (!x) throw InternalError("V is singular");
    return {v, r, std::move(*x)};
}

enum class Verdict { Unisolvent, Singular, NumericallyIndeterminate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Unisolvent: return "unisolvent";
        case Verdict::Singular: return "singular";
        case Verdict::NumericallyIndeterminate: return "numerically-indeterminate";
    }
    return "?";
}

/// Exact matrix (f_i(a_j)) and its determinant.
struct UnisolvenceReport {
    Matrix<Rational> matrix;
    Rational determinant;
    Verdict verdict = Verdict::Singular;
};

/// Floating-point variant of UnisolvenceReport.
struct FloatUnisolvenceReport {
    Matrix<double> matrix;
    FloatDeterminant determinant;
    double relative_tolerance = 0.0;
    Verdict verdict = Verdict::NumericallyIndeterminate;
};

inline constexpr double kDefaultDetTolerance = 1e-9;

inline UnisolvenceReport vandermonde(const std::vector<Polynomial>& functions, const std::vector<Point>& nodes) {
    if (functions.size() != nodes.size()) throw SizeMismatch(functions.size(), nodes.size());
    if (functions.empty()) throw InvalidArgument("interpolation problem is empty");
    const std::size_t size = functions.size();
    UnisolvenceReport rep;
    rep.matrix = Matrix<Rational>(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) rep.matrix(i, j) = functions[i](nodes[j]);
    rep.determinant = determinant(rep.matrix);
    rep.verdict = rep.determinant != 0 ? Verdict::Unisolvent : Verdict::Singular;
    return rep;
}

inline UnisolvenceReport vandermonde(const BasisSet& b, const NodeSet& s) {
    if (b.n() != s.n()) throw DimensionMismatch("basis and nodes live in different dimensions");
    return vandermonde(b.functions(), s.points());
}

/// Pivoted elimination in double precision. |det| below `rel_tol` times the
/// product of row norms is reported as numerically indeterminate.
inline FloatUnisolvenceReport vandermonde_float(const std::vector<Polynomial>& functions,
                                                const std::vector<std::vector<double>>& nodes,
                                                double rel_tol = kDefaultDetTolerance) {
    if (functions.size() != nodes.size()) throw SizeMismatch(functions.size(), nodes.size());
    if (functions.empty()) throw InvalidArgument("interpolation problem is empty");
    if (!(rel_tol > 0.0)) throw InvalidArgument("determinant tolerance must be positive");
    const std::size_t size = functions.size();
    FloatUnisolvenceReport rep;
    rep.relative_tolerance = rel_tol;
    rep.matrix = Matrix<double>(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) rep.matrix(i, j) = functions[i].evaluate(nodes[j]);
    rep.determinant = float_determinant(rep.matrix);
    const double bound = rep.determinant.row_norm_product;
    rep.verdict = std::abs(rep.determinant.value) > rel_tol * bound ? Verdict::Unisolvent
                                                                     : Verdict::NumericallyIndeterminate;
    return rep;
}

enum class Condition { SizeMatch = 1, OrbitCountMatch = 2, OrbitVectorMatch = 3 };

inline const char* describe(Condition c) {
    switch (c) {
        case Condition::SizeMatch: return "number of basis functions equals number of nodes";
        case Condition::OrbitCountMatch: return "S_n-orbit counts of basis and nodes agree";
        case Condition::OrbitVectorMatch: return "orbit vector of the nodes solves V X = r";
    }
    return "?";
}

struct ConditionResult {
    Condition condition;
    bool passed = false;
    std::string detail;
};

/// Necessary conditions for unisolvence, cheapest first, stopping at the
/// first failure. Passing all of them is not sufficient.
struct NecessaryConditionReport {
    std::vector<ConditionResult> checks;
    std::optional<ConstraintSystem> system;
    /// Set when the V X = r check was skipped because of the enumeration limit.
    std::optional<std::string> notice;

    bool satisfied() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }

    std::optional<Condition> first_violation() const {
        for (const auto& c : checks)
            if (!c.passed) return c.condition;
        return std::nullopt;
    }
};

inline NecessaryConditionReport check_necessary_conditions(const BasisSet& b, const NodeSet& s,
                                                           std::size_t limit = kDefaultEnumLimit) {
    if (b.n() != s.n()) throw DimensionMismatch("basis and nodes live in different dimensions");
    NecessaryConditionReport rep;
    {
        const bool ok = b.size() == s.size();
        rep.checks.push_back({Condition::SizeMatch, ok,
                              std::to_string(b.size()) + " functions, " + std::to_string(s.size()) + " nodes"});
        if (!ok) return rep;
    }
    {
        const bool ok = b.orbits().size() == s.orbits().size();
        rep.checks.push_back({Condition::OrbitCountMatch, ok,
                              std::to_string(b.orbits().size()) + " basis orbits, " +
                                  std::to_string(s.orbits().size()) + " node orbits"});
        if (!ok) return rep;
    }
    if (s.n() > limit) {
        rep.notice = "V X = r check skipped: the stabilizer orbit counts need n <= " + std::to_string(limit) +
                     " (n = " + std::to_string(s.n()) + "); only conditions 1 and 2 were checked";
        return rep;
    }
    rep.system = solve_constraints(v_matrix(s.n()), r_vector(b, limit));
    const OrbitVector x = orbit_vector(s);
    const auto expected = rep.system->orbit_vector();
    const bool ok = expected && *expected == x;
    std::string detail;
    if (!rep.system->admissible()) {
        detail = "V X = r has no non-negative integer solution";
    } else if (!ok) {
        detail = "orbit vector mismatch";
    } else {
        detail = "orbit vector equals the solution of V X = r";
    }
    rep.checks.push_back({Condition::OrbitVectorMatch, ok, detail});
    return rep;
}

enum class Independence { Independent, PossiblyDependent };

/// Linear independence of the basis via the exact rank of its values at
/// `trials` batches of random integer points. Full rank certifies
/// independence; a deficient rank at every batch is reported as possibly
/// dependent.
template <class Rng>
Independence check_linear_independence(const std::vector<Polynomial>& functions, Rng& rng, int trials = 3) {
    if (functions.empty()) return Independence::Independent;
    const std::size_t n = functions.front().n();
    const std::size_t size = functions.size();
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (int t = 0; t < trials; ++t) {
        Matrix<Rational> m(size, size);
        for (std::size_t j = 0; j < size; ++j) {
            Point x(n);
            for (auto& v : x) v = coord(rng);
            for (std::size_t i = 0; i < size; ++i) m(i, j) = functions[i](x);
        }
        if (rank(std::move(m)) == size) return Independence::Independent;
    }
    return Independence::PossiblyDependent;
}

}  // namespace symlag
