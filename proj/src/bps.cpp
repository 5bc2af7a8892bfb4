#include "qvl/bps.hpp"

#include <stdexcept>

#include "qvl/errors.hpp"
#include "qvl/invariants.hpp"
#include "qvl/qcomb.hpp"
#include "qvl/qrational.hpp"

namespace qvl {

int mobius(int k) {
    if (k < 1) throw std::domain_error("mobius: argument must be >= 1");
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;  // square factor
        result = -result;
    }
    if (k > 1) result = -result;
    return result;
}

std::vector<int> class_divisors(const CurveClass& d) {
    const int g = class_gcd(d);
    if (g < 1) throw std::domain_error("class_divisors: zero class");
    std::vector<int> out;
    for (int k = 1; k <= g; ++k)
        if (g % k == 0) out.push_back(k);
    return out;
}

namespace {

void require_positive_inter(const CurveClass& d, const char* who) {
    auto [w1, w2] = inter(d);
    if (w1 <= 0 || w2 <= 0)
        throw std::domain_error(std::string(who) + ": needs positive intersection with both divisors");
}

}  // namespace

Rational genus0_log(const CurveClass& d) {
    require_positive_inter(d, "genus0_log");
    return classical_limit(nlog_closed(d));
}

Rational local_genus0(const CurveClass& d) {
    auto [w1, w2] = inter(d);
    Rational r = genus0_log(d);  // checks the intersections
    r /= Rational(w1) * w2;
    if ((w1 + w2) % 2) r = -r;   // (-1)^{w1-1} (-1)^{w2-1}
    return r;
}

Int gv(const CurveClass& d) {
    require_positive_inter(d, "gv");
    Rational acc = 0;
    for (int k : class_divisors(d)) {
        const int mu = mobius(k);
        if (mu == 0) continue;
        Rational term = local_genus0(divide_class(d, k));
        term *= Rational(mu, static_cast<long long>(k) * k);
        acc += term;
    }
    if (denominator(acc) != 1)
        throw IntegralityError("gv: non-integral value at class " + to_string(d));
    return numerator(acc);
}

namespace {

void require_even_exponents(const LaurentPoly& p, const CurveClass& d, const char* who) {
    for (const auto& [e, c] : p.terms())
        if (e % 2)
            throw IntegralityError(std::string(who) + ": odd half-power of q at class " + to_string(d));
}

}  // namespace

LaurentPoly lmov(const CurveClass& d) {
    require_positive_inter(d, "lmov");
    LaurentPoly sum;
    const int s = d.d1 + d.d2 + d.d3;
    for (int k : class_divisors(d)) {
        const int mu = mobius(k);
        if (mu == 0) continue;
        // the log series of d/k in polynomial form, via the block-sum restriction
        LaurentPoly nl = g_closed(nlog_params(divide_class(d, k)));
        const int sign = (s / k) % 2 ? -mu : mu;
        sum += subst_power(nl, k) * Int(sign);
    }
    auto [w1, w2] = inter(d);
    LaurentPoly num = qint(1) * qint(1) * sum;
    LaurentPoly out;
    try {
        out = exact_div(num, qint(w1) * qint(w2));
    } catch (const DivisibilityError&) {
        throw IntegralityError("lmov: non-polynomial value at class " + to_string(d));
    }
    require_even_exponents(out, d, "lmov");
    return out;
}

LaurentPoly lmov_from_open(const CurveClass& d) {
    require_positive_inter(d, "lmov_from_open");
    QRational acc;
    for (int k : class_divisors(d)) {
        const int mu = mobius(k);
        if (mu == 0) continue;
        QRational term = subst_power(open_closed(divide_class(d, k)), k);
        term.scale(Rational(mu, k));
        acc += term;
    }
    auto [w1, w2] = inter(d);
    (void)w2;
    QRational res(acc.num() * qint(1) * qint(1) * Int(w1), acc.den() * qint(w1));
    LaurentPoly out;
    try {
        out = res.to_laurent();
    } catch (const DivisibilityError&) {
        throw IntegralityError("lmov_from_open: non-polynomial value at class " + to_string(d));
    }
    require_even_exponents(out, d, "lmov_from_open");
    return out;
}

Int dt_num(const CurveClass& d) { return boost::multiprecision::abs(gv(d)); }

}  // namespace qvl
