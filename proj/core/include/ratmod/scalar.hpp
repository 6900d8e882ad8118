#pragma once

#include <gmpxx.h>

#include <string>

namespace ratmod {

// Exact rational. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1)
{
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// "p" or "p/q"; throws std::invalid_argument on malformed text.
Scalar parse_scalar(const std::string& text);

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline int sign_of_parity(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace ratmod
