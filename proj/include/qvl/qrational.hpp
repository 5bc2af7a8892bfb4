#pragma once

#include <string>
#include <utility>

#include "qvl/errors.hpp"
#include "qvl/laurent.hpp"

namespace qvl {

/// Exact rational function of s kept as a numerator/denominator pair.
///
/// Deliberately not reduced by polynomial gcd: normalisation only strips the
/// joint integer content and makes the coefficient of the denominator's
/// lowest term positive. Equality is decided by cross-multiplication, which
/// is exact and cheaper than canonical reduction for the sizes that arise
/// here.
class QRational {
public:
    QRational() : num_(), den_(1) {}
    QRational(LaurentPoly numerator) : num_(std::move(numerator)), den_(1) { normalize(); }
    QRational(int c) : num_(c), den_(1) { normalize(); }

    /// Throws std::domain_error when denominator is the zero polynomial.
    QRational(LaurentPoly numerator, LaurentPoly denominator);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QRational operator-() const;
    QRational& operator+=(const QRational& rhs);
    QRational& operator-=(const QRational& rhs);
    QRational& operator*=(const QRational& rhs);

    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }

    /// Exact scaling by an integer or rational constant.
    QRational& scale(const Rational& r);

    /// Cross-multiplied equality: a.num*b.den == b.num*a.den.
    bool operator==(const QRational& rhs) const;
    bool operator!=(const QRational& rhs) const { return !(*this == rhs); }

    /// Exact quotient num/den as a Laurent polynomial; throws
    /// DivisibilityError when the value is not polynomial.
    LaurentPoly to_laurent() const;

    /// "(num)/(den)", or just the numerator's text when den == 1.
    std::string text() const;

private:
    void normalize();

    LaurentPoly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const QRational& r) { return os << r.text(); }

QRational bar(const QRational& r);
QRational subst_power(const QRational& r, int k);

/// Exact limit q -> 1. A global power of s is first divided out (it does not
/// move the value at s = 1), then common roots at s = 1 are peeled off both
/// parts by synthetic division until the denominator no longer vanishes.
/// Throws PoleError when the limit genuinely diverges.
Rational classical_limit(const QRational& r);

}  // namespace qvl
