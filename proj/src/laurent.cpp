#include "qvl/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qvl {

LaurentPoly::LaurentPoly(int c) : LaurentPoly(Int(c)) {}

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = rhs.terms_.begin(), be = rhs.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Int c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // dense accumulation over the exponent window of the product
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<Int> acc(static_cast<size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            acc[static_cast<size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly out;
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) out.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, k] : terms_) k *= c;
    return *this;
}

void LaurentPoly::divide_coeffs(const Int& c) {
    for (auto& [e, k] : terms_) {
        Int q, r;
        boost::multiprecision::divide_qr(k, c, q, r);
        if (r != 0) throw std::logic_error("LaurentPoly::divide_coeffs: inexact");
        k = std::move(q);
    }
}

namespace {

// q^{n/2} for s-exponent n: "q^{1/2}", "q", "q^{-2}", ...
std::string qpow_text(int n) {
    if (n % 2 == 0) {
        const int p = n / 2;
        if (p == 1) return "q";
        return "q^{" + std::to_string(p) + "}";
    }
    return "q^{" + std::to_string(n) + "/2}";
}

}  // namespace

std::string LaurentPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << qpow_text(e);
        }
    }
    return os.str();
}

LaurentPoly bar(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms(p.terms().rbegin(), p.terms().rend());
    for (auto& [e, c] : terms) e = -e;
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly subst_power(const LaurentPoly& p, int k) {
    if (k < 1) throw std::domain_error("subst_power: power must be >= 1");
    std::vector<LaurentPoly::Term> terms = p.terms();
    for (auto& [e, c] : terms) e *= k;
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    // any valid quotient is supported on [qlo, qhi]
    const int qlo = a.min_exp() - b.min_exp();
    const int qhi = a.max_exp() - b.max_exp();
    if (qlo > qhi) throw DivisibilityError("exact_div: nonzero remainder", a);

    LaurentPoly rem = a;
    std::vector<LaurentPoly::Term> quot;  // built with descending exponents
    const auto& blead = b.terms().back();
    while (!rem.is_zero()) {
        const auto& rlead = rem.terms().back();
        const int e = rlead.first - blead.first;
        if (e < qlo || e > qhi) throw DivisibilityError("exact_div: nonzero remainder", rem);
        Int q, r;
        boost::multiprecision::divide_qr(rlead.second, blead.second, q, r);
        if (r != 0) throw DivisibilityError("exact_div: nonzero remainder", rem);
        quot.emplace_back(e, q);
        rem -= LaurentPoly::monomial(std::move(q), e) * b;
    }
    std::reverse(quot.begin(), quot.end());
    return LaurentPoly::from_terms(std::move(quot));
}

}  // namespace qvl
