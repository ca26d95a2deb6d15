// ============================================================================
// rational.cpp — exact rational constants with decimal I/O
// ============================================================================

#include "reqlint/rational.hpp"

#include <cctype>
#include <numeric>

#include "reqlint/errors.hpp"

namespace reqlint {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw Error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    std::string int_digits, frac_digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        int_digits += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            frac_digits += text[i++];
        if (frac_digits.empty())
            throw Error("malformed decimal literal '" + std::string(text) + "'");
    }
    if (int_digits.empty() || i != text.size())
        throw Error("malformed decimal literal '" + std::string(text) + "'");
    if (int_digits.size() + frac_digits.size() > 18)
        throw Error("decimal literal '" + std::string(text) + "' exceeds 18 significant digits");

    std::int64_t value = 0;
    for (char c : int_digits) value = value * 10 + (c - '0');
    for (char c : frac_digits) value = value * 10 + (c - '0');
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac_digits.size(); ++k) den *= 10;
    return Rational(negative ? -value : value, den);
}

std::string Rational::to_decimal_string() const {
    // Factor the denominator as 2^a * 5^b; scale numerator to 10^max(a,b).
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    const int k = twos > fives ? twos : fives;
    Wide scaled = num_ < 0 ? -Wide(num_) : Wide(num_);
    for (int i = 0; i < k - twos; ++i) scaled *= 2;
    for (int i = 0; i < k - fives; ++i) scaled *= 5;

    Wide pow10 = 1;
    for (int i = 0; i < k; ++i) pow10 *= 10;
    Wide whole = scaled / pow10;
    Wide frac = scaled % pow10;

    std::string whole_str;
    if (whole == 0) {
        whole_str = "0";
    } else {
        while (whole > 0) {
            whole_str.insert(whole_str.begin(), static_cast<char>('0' + int(whole % 10)));
            whole /= 10;
        }
    }
    std::string frac_str;
    if (frac > 0) {
        frac_str.assign(static_cast<std::size_t>(k), '0');
        for (int i = k - 1; i >= 0 && frac > 0; --i) {
            frac_str[static_cast<std::size_t>(i)] = static_cast<char>('0' + int(frac % 10));
            frac /= 10;
        }
        while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
    }

    std::string out;
    if (num_ < 0) out += '-';
    out += whole_str;
    if (!frac_str.empty()) {
        out += '.';
        out += frac_str;
    }
    return out;
}

Rational Rational::operator+(const Rational& other) const {
    const Wide n = Wide(num_) * other.den_ + Wide(other.num_) * den_;
    const Wide d = Wide(den_) * other.den_;
    // Reduce in wide arithmetic before narrowing.
    Wide a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return Rational(narrow(n / a), narrow(d / a));
}

Rational Rational::operator-(const Rational& other) const { return *this + (-other); }

bool Rational::operator<(const Rational& other) const {
    return Wide(num_) * other.den_ < Wide(other.num_) * den_;
}

Rational Rational::midpoint(const Rational& a, const Rational& b) {
    const Rational sum = a + b;
    return Rational(sum.num(), narrow(Wide(sum.den()) * 2));
}

} // namespace reqlint
