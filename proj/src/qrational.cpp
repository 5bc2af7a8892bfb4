#include "qvl/qrational.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace qvl {

QRational::QRational(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
    normalize();
}

void QRational::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_.divide_coeffs(g);
        den_.divide_coeffs(g);
    }
    if (den_.terms().front().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRational QRational::operator-() const {
    QRational r(*this);
    r.num_ = -r.num_;
    return r;
}

QRational& QRational::operator+=(const QRational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
    normalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& rhs) { return *this += -rhs; }

QRational& QRational::operator*=(const QRational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

QRational& QRational::scale(const Rational& r) {
    num_ *= numerator(r);
    den_ *= denominator(r);
    normalize();
    return *this;
}

bool QRational::operator==(const QRational& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

LaurentPoly QRational::to_laurent() const { return exact_div(num_, den_); }

std::string QRational::text() const {
    if (den_ == LaurentPoly(1)) return num_.text();
    return "(" + num_.text() + ")/(" + den_.text() + ")";
}

QRational bar(const QRational& r) { return QRational(bar(r.num()), bar(r.den())); }

QRational subst_power(const QRational& r, int k) {
    return QRational(subst_power(r.num(), k), subst_power(r.den(), k));
}

namespace {

// coefficient vector of p shifted to start at exponent 0 (a global power of
// s does not change the value at s = 1)
std::vector<Int> dense_at_zero(const LaurentPoly& p) {
    const int lo = p.min_exp();
    std::vector<Int> v(static_cast<size_t>(p.max_exp() - lo + 1));
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - lo)] = c;
    return v;
}

Int value_at_one(const std::vector<Int>& v) {
    Int s = 0;
    for (const auto& c : v) s += c;
    return s;
}

// synthetic division by (s - 1); valid exactly when the value at 1 is 0
void peel_root_at_one(std::vector<Int>& v) {
    assert(v.size() >= 2);
    std::vector<Int> q(v.size() - 1);
    Int carry = 0;
    for (size_t i = v.size() - 1; i >= 1; --i) {
        carry += v[i];
        q[i - 1] = carry;
    }
    assert(carry + v[0] == 0);
    v = std::move(q);
}

}  // namespace

Rational classical_limit(const QRational& r) {
    if (r.num().is_zero()) return Rational(0);
    std::vector<Int> n = dense_at_zero(r.num());
    std::vector<Int> d = dense_at_zero(r.den());
    for (;;) {
        const Int d1 = value_at_one(d);
        if (d1 != 0) {
            const Int n1 = value_at_one(n);
            // the two-argument rational constructor wants a positive denominator
            return d1 < 0 ? Rational(-n1, -d1) : Rational(n1, d1);
        }
        if (value_at_one(n) != 0)
            throw PoleError("classical_limit: pole at q = 1");
        peel_root_at_one(n);
        peel_root_at_one(d);
    }
}

}  // namespace qvl
