#pragma once

// Multivariate polynomials over Q in x1..xn, kept in canonical form.

#include "symlag/nodeset.hpp"

#include <map>
#include <string>
#include <vector>

namespace symlag {

/// Exponent vector (e_1..e_n) of x1^e_1 * ... * xn^e_n.
using Monomial = std::vector<std::size_t>;

/// Sparse polynomial: monomial -> nonzero coefficient, lexicographic on
/// exponents. Two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    explicit Polynomial(std::size_t n) : n_(n) {
        if (n == 0) throw InvalidArgument("polynomial dimension must be positive");
    }

    Polynomial(std::size_t n, const std::vector<std::pair<Monomial, Rational>>& terms) : Polynomial(n) {
        for (const auto& [m, c] : terms) add_term(m, c);
    }

    static Polynomial monomial(Monomial exponents, Rational coeff = 1) {
        Polynomial p(exponents.size());
        p.add_term(exponents, coeff);
        return p;
    }

    static Polynomial constant(std::size_t n, Rational value) { return monomial(Monomial(n, 0), std::move(value)); }

    std::size_t n() const noexcept { return n_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != n_) throw DimensionMismatch("monomial has " + std::to_string(m.size()) + " exponents, expected " +
                                                    std::to_string(n_));
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational operator()(const Point& x) const {
        if (x.size() != n_) throw DimensionMismatch("evaluation point has the wrong dimension");
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t e = 0; e < m[i]; ++e) t *= x[i];
            sum += t;
        }
        return sum;
    }

    double evaluate(const std::vector<double>& x) const {
        if (x.size() != n_) throw DimensionMismatch("evaluation point has the wrong dimension");
        double sum = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = c.convert_to<double>();
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t e = 0; e < m[i]; ++e) t *= x[i];
            sum += t;
        }
        return sum;
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), std::size_t{0}));
        return d;
    }

    /// Human-readable form, e.g. "x1^2*x2 - 3/2*x3 + 1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        // highest total degree first reads naturally
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                s += symlag::to_string(mag);
            } else if (mag == 1) {
                s += mono;
            } else {
                s += symlag::to_string(mag) + "*" + mono;
            }
        }
        return s;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.terms_ < b.terms_;
    }

private:
    std::size_t n_;
    std::map<Monomial, Rational> terms_;
};

/// sigma.f := f o sigma^{-1}. On exponents this is the coordinate action:
/// the new exponent of x_j is the old exponent of x_{sigma(j)}.
inline Polynomial act_on_function(const Permutation& sigma, const Polynomial& f) {
    if (sigma.n() != f.n()) throw DimensionMismatch("permutation and polynomial dimensions differ");
    Polynomial out(f.n());
    for (const auto& [m, c] : f.terms()) out.add_term(apply_to_point(sigma, m), c);
    return out;
}

}  // namespace symlag
