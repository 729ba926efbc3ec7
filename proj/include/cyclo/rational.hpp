#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

// Exact rational scalar. mpq_class keeps the canonical form invariant for us:
// denominator > 0 and gcd(|num|, den) = 1 after every operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with optional sign.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    try {
        Rational q(text);
        if (q.get_den() == 0) throw InputError("rational with zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("unparsable rational literal: " + text);
    }
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// Value of num/den in Z/p. Throws BadPrimeError when p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

} // namespace cyclo
