#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "treepart/errors.hpp"

namespace treepart {

/// Exact rational number. All arithmetic in the library is exact; there is
/// no floating-point code path.
using Rational = mpq_class;

/// Build a canonical rational from an integer fraction.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical string form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parse "p" or "p/q" with arbitrary-precision integers. Rejects anything
/// else (whitespace, hex, empty parts, zero denominator).
Rational rational_from_string(std::string_view text);

}  // namespace treepart
