// ============================================================================
// rational.hpp — exact rational constants with decimal I/O
// ============================================================================
//
// Constraint constants are written as decimal literals ("20", "-3.5", "0.125")
// and must compare exactly: region boundaries collapse or split depending on
// whether two constants are equal, so binary floating point is off the table.
// A constant is held as a normalized int64 fraction; all values that arise in
// the pipeline (parsed decimals, interval midpoints, endpoint +/- 1) keep the
// denominator of the form 2^a * 5^b, so the canonical rendering is always a
// finite decimal string.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace reqlint {

class Rational {
public:
    // Zero.
    Rational() : num_(0), den_(1) {}

    // From an integer.
    explicit Rational(std::int64_t value) : num_(value), den_(1) {}

    // From a fraction; normalizes sign and gcd. den must be nonzero.
    Rational(std::int64_t num, std::int64_t den);

    // Parses a decimal literal: [+-]? digits (.digits)?  Throws reqlint::Error
    // on malformed input or on literals too long for exact int64 arithmetic.
    static Rational parse_decimal(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // Canonical finite decimal rendering ("20", "-3.5", "0.125"). Falls back
    // to "num/den" if the denominator is not of the form 2^a * 5^b (cannot
    // happen for values produced by this pipeline, but the fallback keeps the
    // function total).
    std::string to_decimal_string() const;

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const Rational& other) const { return !(*this == other); }
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const { return *this < other || *this == other; }
    bool operator>(const Rational& other) const { return other < *this; }
    bool operator>=(const Rational& other) const { return other <= *this; }

    // Exact midpoint of two values; used for representative points of open
    // intervals between adjacent constants.
    static Rational midpoint(const Rational& a, const Rational& b);

    std::size_t hash() const {
        std::size_t h = std::hash<std::int64_t>{}(num_);
        h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::int64_t num_;
    std::int64_t den_; // > 0, gcd(|num|, den) == 1
};

} // namespace reqlint
