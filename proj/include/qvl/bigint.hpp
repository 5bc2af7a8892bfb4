#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qvl {

/// Arbitrary-precision signed integer. Every coefficient in the library is
/// one of these; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical (reduced, positive
/// denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

/// Canonical text for a rational: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
    Int p = numerator(r), q = denominator(r);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

}  // namespace qvl
