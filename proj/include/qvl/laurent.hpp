#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qvl/bigint.hpp"

namespace qvl {

/// Exact Laurent polynomial in s = q^{1/2} with Int coefficients.
///
/// Working in s keeps every exponent integral: the balanced q-integer
/// [n] = q^{n/2} - q^{-n/2} is the two-term polynomial s^n - s^{-n}, and all
/// products of balanced brackets stay in Z[s, s^{-1}]. A stored exponent n
/// therefore denotes the q-power q^{n/2}.
///
/// Representation: terms sorted by ascending exponent, no zero coefficients
/// kept, the zero polynomial owning no terms at all. The representation is
/// canonical, so operator== is plain structural equality.
class LaurentPoly {
public:
    /// (exponent of s, coefficient)
    using Term = std::pair<int, Int>;

    LaurentPoly() = default;          ///< zero
    LaurentPoly(int c);               ///< constant
    LaurentPoly(Int c);               ///< constant

    static LaurentPoly monomial(Int coeff, int exp);

    /// Builds from an arbitrary term list: sorts, merges duplicate exponents,
    /// drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }

    /// Lowest/highest stored exponent. Precondition: not zero.
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }

    /// Coefficient of s^exp (zero when absent).
    Int coeff(int exp) const;

    const std::vector<Term>& terms() const { return terms_; }

    /// Exact evaluation at s = 1, i.e. the coefficient sum.
    Int at_one() const;

    /// gcd of the coefficient magnitudes; 0 for the zero polynomial.
    Int content() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Int& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
    friend LaurentPoly operator*(const Int& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Divides every coefficient by c. Precondition: the division is exact.
    void divide_coeffs(const Int& c);

    /// Canonical text form, terms ascending by exponent, with s^n printed as
    /// the q-power q^{n/2}: e.g. "-q^{-1/2} + q^{1/2}", "q^{-1} + 2 + q".
    std::string text() const;

private:
    std::vector<Term> terms_;
};

/// Thrown by exact_div when the division leaves a remainder (or would need
/// fractional coefficients). Carries the offending remainder.
class DivisibilityError : public std::runtime_error {
public:
    DivisibilityError(const std::string& what, LaurentPoly remainder)
        : std::runtime_error(what), remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.text(); }

/// Bar involution q^{1/2} -> q^{-1/2}: negates every exponent.
LaurentPoly bar(const LaurentPoly& p);

/// Substitution q -> q^k, i.e. s^n -> s^{kn}. Precondition: k >= 1.
LaurentPoly subst_power(const LaurentPoly& p, int k);

/// Exact division in Z[s, s^{-1}]: returns q with a = q*b, or throws
/// DivisibilityError. Greedy leading-term elimination; complete for Laurent
/// divisibility because any valid quotient exponent lies in
/// [min_exp(a)-min_exp(b), max_exp(a)-max_exp(b)].
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qvl
