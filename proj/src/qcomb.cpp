#include "qvl/qcomb.hpp"

#include <stdexcept>

namespace qvl {

LaurentPoly qint(int n) {
    if (n == 0) return {};
    if (n < 0) return -qint(-n);
    return LaurentPoly::from_terms({{-n, -1}, {n, 1}});
}

LaurentPoly qfact(int n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    LaurentPoly p(1);
    for (int i = 1; i <= n; ++i) p *= qint(i);
    return p;
}

LaurentPoly qbinom(int n, int m) {
    if (m < 0 || n < 0 || m > n) return {};
    return exact_div(qfact(n), qfact(m) * qfact(n - m));
}

LaurentPoly qbinom_ext(int n, int m) {
    if (m < 0) return {};
    if (n >= 0) return qbinom(n, m);
    LaurentPoly val = qbinom(m - n - 1, m);
    return (m % 2 != 0) ? -val : val;
}

}  // namespace qvl
