#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace polyproj {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which is all the arithmetic in this library relies on.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline int sign_of(const Rational& x) { return x.sign(); }

inline Rational rat(long p, long q = 1) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(p, q);
}

inline Rational abs_rat(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Parses "p" or "p/q" with optional leading minus; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Decimal approximation with the given number of fractional digits,
/// rounded toward zero. Used only for report output.
inline std::string to_decimal(const Rational& x, int digits = 6) {
    Integer p = numerator(x), q = denominator(x);
    bool neg = p < 0;
    if (neg) p = -p;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer whole = p / q;
    Integer frac = ((p - whole * q) * scale) / q;
    std::string f = frac.str();
    if ((int)f.size() < digits) f = std::string(digits - f.size(), '0') + f;
    std::string out = (neg && (whole != 0 || frac != 0) ? "-" : "") + whole.str();
    if (digits > 0) out += "." + f;
    return out;
}

} // namespace polyproj
