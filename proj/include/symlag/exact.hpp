#pragma once

// Exact arithmetic types and the library's error hierarchy.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symlag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An operation would need to enumerate more of S_n than the configured limit.
class CapacityError : public Error {
public:
    CapacityError(std::size_t n, std::size_t limit)
        : Error("enumeration of S_" + std::to_string(n) + " exceeds the limit n <= " +
                std::to_string(limit) + " (raise --enum-limit or SYMLAG_ENUM_LIMIT)"),
          n_(n), limit_(limit) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t n_;
    std::size_t limit_;
};

/// Broken internal invariant; never caused by user input.
class InternalError : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t kDefaultEnumLimit = 10;

/// Enumeration limit from SYMLAG_ENUM_LIMIT, or the default when unset/invalid.
inline std::size_t enum_limit_from_env() {
    const char* raw = std::getenv("SYMLAG_ENUM_LIMIT");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumLimit;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return kDefaultEnumLimit;
    return static_cast<std::size_t>(v);
}

inline BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Parses an optionally signed decimal integer; nullopt on malformed text.
inline std::optional<BigInt> parse_bigint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

/// Parses "p", "p/q" or a plain decimal such as "-1.25" or "3e-2" exactly.
inline std::optional<Rational> parse_rational(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = parse_bigint(trim(s.substr(0, slash)));
        auto den = parse_bigint(trim(s.substr(slash + 1)));
        if (!num || !den || *den == 0) return std::nullopt;
        return Rational(*num, *den);
    }
    // decimal with optional fraction and exponent
    std::size_t epos = s.find_first_of("eE");
    std::string_view mant = s.substr(0, epos);
    long long exp10 = 0;
    if (epos != std::string_view::npos) {
        auto e = parse_bigint(s.substr(epos + 1));
        if (!e || abs(*e) > 100000) return std::nullopt;
        exp10 = e->convert_to<long long>();
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    bool seen_dot = false;
    bool any_digit = false;
    for (char ch : mant) {
        if (ch == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            any_digit = true;
            if (seen_dot) --exp10;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit) return std::nullopt;
    BigInt num = *parse_bigint(digits);
    if (neg) num = -num;
    BigInt scale = 1;
    for (long long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) scale *= 10;
    return exp10 < 0 ? Rational(num, scale) : Rational(num * scale);
}

}  // namespace symlag
