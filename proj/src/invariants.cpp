#include "qvl/invariants.hpp"

#include <stdexcept>

#include "qbinom_memo.hpp"
#include "qvl/qcomb.hpp"

namespace qvl {

namespace {

using detail::qbinom_memo;

// the common binomial block of the closed forms
LaurentPoly closed_binomials(const CurveClass& d) {
    const int s = d.d1 + d.d2 + d.d3;
    return qbinom_memo(d.d3, d.d0 - d.d1) * qbinom_memo(d.d3, d.d0 - d.d2) *
           qbinom_memo(d.d0, d.d3) * qbinom_memo(s - d.d0, d.d3);
}

}  // namespace

QRational nlog_closed(const CurveClass& d) {
    LaurentPoly num = qint(d.d1) * qint(d.d2 + d.d3) * closed_binomials(d);
    if (num.is_zero()) return QRational();
    // a nonzero numerator forces d0 >= d3 > 0 and d1+d2+d3-d0 >= d3 > 0,
    // so the denominator brackets cannot vanish
    LaurentPoly den = qint(d.d0) * qint(d.d1 + d.d2 + d.d3 - d.d0);
    return QRational(std::move(num), std::move(den));
}

QRational open_closed(const CurveClass& d) {
    if (d.d1 == 0) return QRational();
    LaurentPoly num = qint(d.d1) * closed_binomials(d);
    if (num.is_zero()) return QRational();
    if ((d.d1 + d.d2 + d.d3) % 2) num = -num;
    LaurentPoly den = qint(d.d0) * qint(d.d1 + d.d2 + d.d3 - d.d0);
    den *= Int(d.d1);
    return QRational(std::move(num), std::move(den));
}

QRational open_from_log(const CurveClass& d) {
    auto [w1, w2] = inter(d);
    if (w1 <= 0 || w2 <= 0)
        throw std::domain_error("open_from_log: needs positive intersection with both divisors");
    QRational r = nlog_closed(d);
    // ((-1)^{d1-1}/d1) ((-1)^{d2+d3-1}/[d2+d3])
    const int sign = ((w1 - 1) + (w2 - 1)) % 2 ? -1 : 1;
    QRational factor(LaurentPoly(sign), qint(w2));
    factor.scale(Rational(1, w1));
    return r * factor;
}

LaurentPoly gtilde(const GParams& p) {
    return detail::qbinom_ext_memo(p.b - p.a + p.e, p.b - p.c) *
           detail::qbinom_ext_memo(p.c - p.a + p.d + p.e, p.c) *
           qbinom_memo(p.a - p.c, p.d) * qbinom_memo(p.a - p.d, p.b - p.d);
}

LaurentPoly g_closed(const GParams& p) {
    return gtilde(p) - gtilde({p.a - 1, p.b, p.c, p.d, p.e - 2});
}

}  // namespace qvl
