#pragma once

// JSON encodings of types, matrices, node sets and bases, and the
// polynomial shorthand parser ("x1^2*x3 - 1/2*x2").

#include "symlag/interp.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace symlag::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symlag/1";

/// Input that could not be read or understood.
class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// ---- encoding -------------------------------------------------------------

/// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
inline Json to_json(const BigInt& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

/// [num, den]
inline Json to_json(const Rational& q) { return Json::array({to_json(numerator(q)), to_json(denominator(q))}); }

inline Json to_json(const OrbitType& t) { return Json(t.counts()); }

inline Json to_json(const Permutation& p) { return Json(p.images()); }

inline Json to_json(const Point& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back(to_json(v));
    return a;
}

inline Json to_json(const Matrix<BigInt>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// {n, order: [types...], entries: [[...]]}
inline Json to_json(const TypeMatrix& m) {
    Json j;
    j["n"] = m.n;
    Json order = Json::array();
    for (const auto& t : m.order) order.push_back(to_json(t));
    j["order"] = std::move(order);
    j["entries"] = to_json(m.entries);
    return j;
}

inline Json to_json(const OrbitVector& v) { return Json(v.counts); }

inline Json to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back(Json{{"exponents", m}, {"coeff", to_json(c)}});
    return terms;
}

inline Json to_json(const NodeSet& s) {
    Json j;
    j["n"] = s.n();
    Json pts = Json::array();
    for (const auto& p : s.points()) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    return j;
}

// ---- decoding -------------------------------------------------------------

inline BigInt bigint_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        if (auto z = parse_bigint(j.get<std::string>())) return *z;
    }
    throw ParseError(where + ": expected an integer, got " + j.dump());
}

/// Decimal text of a JSON float, shortest round-trip form.
inline std::string float_text(double d) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, ptr);
}

struct CoordinateReader {
    /// When set, decimal inputs are replaced by the simplest rational within
    /// this distance and each replacement is recorded.
    std::optional<Rational> snap_tolerance;
    std::vector<Snap> snaps;

    Rational read(const Json& j, const std::string& where) {
        if (j.is_array()) {
            if (j.size() != 2) throw ParseError(where + ": rational must be [num, den]");
            const BigInt num = bigint_from_json(j[0], where);
            const BigInt den = bigint_from_json(j[1], where);
            if (den == 0) throw ParseError(where + ": zero denominator");
            return Rational(num, den);
        }
        if (j.is_number_integer()) return Rational(bigint_from_json(j, where));
        std::string text;
        if (j.is_number_float()) {
            text = float_text(j.get<double>());
        } else if (j.is_string()) {
            text = j.get<std::string>();
        } else {
            throw ParseError(where + ": expected a number, got " + j.dump());
        }
        auto exact = parse_rational(text);
        if (!exact) throw ParseError(where + ": cannot parse number \"" + text + "\"");
        const bool decimal = text.find('/') == std::string::npos &&
                             text.find_first_of(".eE") != std::string::npos;
        if (!decimal || !snap_tolerance) return *exact;
        Rational snapped = snap_rational(*exact, *snap_tolerance);
        if (snapped != *exact) snaps.push_back({text, *exact, snapped});
        return snapped;
    }
};

struct ParsedNodes {
    std::size_t n = 0;
    std::vector<Point> points;
    std::vector<Snap> snaps;
};

/// {"n": 3, "points": [[c, c, c], ...]}; a coordinate is [num, den], an
/// integer, "p/q", or a decimal (string or JSON number).
inline ParsedNodes parse_nodes(const Json& j, std::optional<Rational> snap_tolerance = std::nullopt) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("node file must be an object with a \"points\" array");
    ParsedNodes out;
    CoordinateReader reader{std::move(snap_tolerance), {}};
    if (j.contains("n")) {
        if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
            throw ParseError("\"n\" must be a positive integer");
        out.n = j["n"].get<std::size_t>();
    }
    std::size_t idx = 0;
    for (const auto& p : j["points"]) {
        const std::string where = "points[" + std::to_string(idx++) + "]";
        if (!p.is_array()) throw ParseError(where + ": point must be an array of coordinates");
        Point x;
        for (std::size_t k = 0; k < p.size(); ++k) x.push_back(reader.read(p[k], where + "[" + std::to_string(k) + "]"));
        if (out.n == 0) out.n = x.size();
        if (x.size() != out.n)
            throw ParseError(where + ": expected " + std::to_string(out.n) + " coordinates, got " +
                             std::to_string(x.size()));
        out.points.push_back(std::move(x));
    }
    if (out.n == 0) throw ParseError("cannot determine n: give \"n\" or at least one point");
    out.snaps = std::move(reader.snaps);
    return out;
}

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    /// Terms as (exponents, coefficient), exponents sized to the largest
    /// variable index seen or n when n > 0.
    std::vector<std::pair<std::vector<std::size_t>, Rational>> parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto term = parse_term();
            term.second *= sign;
            terms_.push_back(std::move(term));
            skip_ws();
        }
        for (auto& [m, c] : terms_) m.resize(std::max(n_, max_var_), 0);
        return terms_;
    }

    std::size_t max_var() const noexcept { return max_var_; }

private:
    std::pair<std::vector<std::size_t>, Rational> parse_term() {
        std::vector<std::size_t> exps;
        Rational coeff = 1;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (at_end()) fail("expected a factor");
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                coeff *= parse_number();
            } else if (ch == 'x' || ch == 'y' || ch == 'z') {
                const std::size_t var = parse_variable();
                std::size_t e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_unsigned();
                }
                if (exps.size() < var) exps.resize(var, 0);
                exps[var - 1] += e;
                max_var_ = std::max(max_var_, var);
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            expect_factor = !at_end() && peek() == '*';
            if (expect_factor) ++pos_;
        }
        return {std::move(exps), coeff};
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) ++pos_;
        auto q = parse_rational(s_.substr(start, pos_ - start));
        if (!q) fail("bad number");
        return *q;
    }

    std::size_t parse_variable() {
        const char ch = s_[pos_++];
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (ch != 'x') fail("indexed variables are written x1, x2, ...");
            const std::size_t k = parse_unsigned();
            if (k == 0) fail("variables are numbered from x1");
            return k;
        }
        return ch == 'x' ? 1 : ch == 'y' ? 2 : 3;
    }

    std::size_t parse_unsigned() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("in \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
    std::size_t max_var_ = 0;
    std::vector<std::pair<std::vector<std::size_t>, Rational>> terms_;
};

}  // namespace detail

/// Parses "x1^2*x3 + 3/2*x2 - 1" (x, y, z stand for x1, x2, x3). With
/// n == 0 the dimension is the largest variable index.
inline Polynomial parse_polynomial(std::string_view text, std::size_t n = 0) {
    detail::ExpressionParser parser(text, n);
    auto terms = parser.parse();
    if (n != 0 && parser.max_var() > n)
        throw ParseError("\"" + std::string(text) + "\" uses x" + std::to_string(parser.max_var()) + " but n = " +
                         std::to_string(n));
    const std::size_t dim = std::max(n, parser.max_var());
    if (dim == 0) throw ParseError("cannot infer n from the constant \"" + std::string(text) + "\"; pass n");
    return Polynomial(dim, terms);
}

struct ParsedBasis {
    std::size_t n = 0;
    std::vector<Polynomial> functions;
};

/// Either a list of functions or {"n": ..., "functions": [...]}. A function
/// is a term list [{"exponents": [...], "coeff": [num, den]}, ...] or a
/// shorthand string. `n_hint` applies when the file does not give n.
inline ParsedBasis parse_basis(const Json& j, std::size_t n_hint = 0) {
    const Json* list = &j;
    std::size_t n = n_hint;
    if (j.is_object()) {
        if (!j.contains("functions") || !j["functions"].is_array())
            throw ParseError("basis object must have a \"functions\" array");
        list = &j["functions"];
        if (j.contains("n")) {
            if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
                throw ParseError("\"n\" must be a positive integer");
            n = j["n"].get<std::size_t>();
        }
    } else if (!j.is_array()) {
        throw ParseError("basis file must be a list of functions or an object with \"functions\"");
    }
    // n from explicit exponent vectors, then from variable indices
    if (n == 0) {
        for (const auto& f : *list) {
            if (!f.is_array()) continue;
            for (const auto& t : f)
                if (t.is_object() && t.contains("exponents") && t["exponents"].is_array()) n = t["exponents"].size();
            if (n) break;
        }
    }
    if (n == 0) {
        for (const auto& f : *list) {
            if (!f.is_string()) continue;
            const std::string text = f.get<std::string>();
            detail::ExpressionParser parser(text, 0);
            parser.parse();
            n = std::max(n, parser.max_var());
        }
    }
    if (n == 0) throw ParseError("cannot determine n for the basis; give \"n\" or --n");

    ParsedBasis out{n, {}};
    CoordinateReader coeffs;
    std::size_t idx = 0;
    for (const auto& f : *list) {
        const std::string where = "functions[" + std::to_string(idx++) + "]";
        if (f.is_string()) {
            out.functions.push_back(parse_polynomial(f.get<std::string>(), n));
            continue;
        }
        if (!f.is_array()) throw ParseError(where + ": function must be a term list or a string");
        Polynomial p(n);
        for (const auto& t : f) {
            if (!t.is_object() || !t.contains("exponents") || !t["exponents"].is_array())
                throw ParseError(where + ": term must have an \"exponents\" array");
            std::vector<std::size_t> m;
            for (const auto& e : t["exponents"]) {
                if (!e.is_number_unsigned()) throw ParseError(where + ": exponents must be non-negative integers");
                m.push_back(e.get<std::size_t>());
            }
            if (m.size() != n)
                throw ParseError(where + ": expected " + std::to_string(n) + " exponents, got " +
                                 std::to_string(m.size()));
            const Rational c = t.contains("coeff") ? coeffs.read(t["coeff"], where + ".coeff") : Rational(1);
            p.add_term(m, c);
        }
        out.functions.push_back(std::move(p));
    }
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace symlag::io
