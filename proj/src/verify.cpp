#include "qvl/verify.hpp"

#include <string>

#include "qvl/bps.hpp"
#include "qvl/curve.hpp"
#include "qvl/errors.hpp"
#include "qvl/gsum.hpp"
#include "qvl/invariants.hpp"
#include "qvl/qcomb.hpp"
#include "qvl/scattering.hpp"

namespace qvl {

namespace {

void record(VerifyReport& rep, bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) {
        ++rep.failed;
        if (rep.first_counterexample.empty()) rep.first_counterexample = what;
    }
}

// d0 <= max_d0, 0 <= d1,d2,d3 <= d0+2, both intersections positive
template <typename F>
void for_each_positive_class(int max_d0, F&& fn) {
    for (int d0 = 0; d0 <= max_d0; ++d0)
        for (int d1 = 0; d1 <= d0 + 2; ++d1)
            for (int d2 = 0; d2 <= d0 + 2; ++d2)
                for (int d3 = 0; d3 <= d0 + 2; ++d3) {
                    const CurveClass d{d0, d1, d2, d3};
                    auto [w1, w2] = inter(d);
                    if (w1 > 0 && w2 > 0) fn(d);
                }
}

template <typename F>
void for_each_admissible(int max_d0, F&& fn) {
    for (int d0 = 0; d0 <= max_d0; ++d0)
        for (int d1 = 0; d1 <= d0 + 2; ++d1)
            for (int d2 = 0; d2 <= d0 + 2; ++d2)
                for (int d3 = 0; d3 <= d0 + 2; ++d3) {
                    const CurveClass d{d0, d1, d2, d3};
                    if (admissible(d)) fn(d);
                }
}

}  // namespace

VerifyReport verify_g_identity(const Box& box) {
    VerifyReport rep{"g-identity"};
    for (int a = 0; a <= box.a; ++a)
        for (int b = 0; b <= box.b; ++b)
            for (int c = 0; c <= box.c; ++c)
                for (int d = 0; d <= box.d; ++d)
                    for (int e = 0; e <= box.e; ++e) {
                        const GParams p{a, b, c, d, e};
                        record(rep, g_enum(p) == g_closed(p), "G" + to_string(p));
                    }
    return rep;
}

VerifyReport verify_scat_vs_closed(int max_d0) {
    VerifyReport rep{"scat-vs-closed"};
    for_each_positive_class(max_d0, [&](const CurveClass& d) {
        record(rep, QRational(nlog_scat(d)) == nlog_closed(d), "d=" + to_string(d));
    });
    return rep;
}

VerifyReport verify_trace_vs_scat(int max_d0) {
    VerifyReport rep{"trace-vs-scat"};
    for_each_positive_class(max_d0, [&](const CurveClass& d) {
        record(rep, trace_nlog(d) == nlog_scat(d), "d=" + to_string(d));
    });
    return rep;
}

VerifyReport verify_log_open(int max_d0) {
    VerifyReport rep{"log-open"};
    for_each_admissible(max_d0, [&](const CurveClass& d) {
        auto [w1, w2] = inter(d);
        if (w1 > 0 && w2 > 0)
            record(rep, open_closed(d) == open_from_log(d), "d=" + to_string(d));
        else
            record(rep, open_closed(d).is_zero(), "d=" + to_string(d));
    });
    return rep;
}

VerifyReport verify_recursion(const Box& box) {
    VerifyReport rep{"recursion"};
    for (int a = 1; a <= box.a; ++a)
        for (int b = 1; b <= box.b; ++b)
            for (int c = 0; c <= box.c; ++c)
                for (int d = 0; d <= box.d; ++d)
                    for (int e = 0; e <= box.e; ++e) {
                        const GParams p{a, b, c, d, e};
                        record(rep, g_enum(p) == g_recursion_rhs(p), "G" + to_string(p));
                    }
    return rep;
}

VerifyReport verify_gtilde_recursion(const Box& box) {
    VerifyReport rep{"gtilde-recursion"};
    for (int a = 1; a <= box.a; ++a)
        for (int b = 1; b <= box.b; ++b)
            for (int c = 0; c <= box.c; ++c)
                for (int d = 0; d <= box.d; ++d)
                    for (int e = 0; e <= box.e; ++e) {
                        const GParams p{a, b, c, d, e};
                        auto [lhs, rhs] = gtilde_recursion_check(p);
                        record(rep, lhs == rhs, "block" + to_string(p));
                    }
    return rep;
}

VerifyReport verify_qps(int max_abcd) {
    VerifyReport rep{"qps"};
    for (int A = 0; A <= max_abcd; ++A)
        for (int B = 0; B <= max_abcd; ++B)
            for (int C = 0; C <= max_abcd; ++C)
                for (int D = 0; D <= max_abcd; ++D) {
                    auto [lhs, rhs] = qps_check(A, B, C, D);
                    record(rep, lhs == rhs,
                           "(A,B,C,D)=(" + std::to_string(A) + "," + std::to_string(B) + "," +
                               std::to_string(C) + "," + std::to_string(D) + ")");
                }
    return rep;
}

VerifyReport verify_integrality(int max_d0) {
    VerifyReport rep{"integrality"};
    for_each_admissible(max_d0, [&](const CurveClass& d) {
        auto [w1, w2] = inter(d);
        if (w1 <= 0 || w2 <= 0) return;
        try {
            (void)gv(d);
            record(rep, lmov(d) == lmov_from_open(d), "d=" + to_string(d));
        } catch (const IntegralityError& err) {
            record(rep, false, std::string(err.what()));
        }
    });
    return rep;
}

VerifyReport verify_symmetry(int max_d0, const Box& box, int qalg_n) {
    VerifyReport rep{"symmetry"};
    for (int n = 0; n <= qalg_n; ++n)
        for (int m = 0; m <= n; ++m) {
            const LaurentPoly b = qbinom(n, m);
            record(rep, b == qbinom(n, n - m) && b == bar(b),
                   "qbinom(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
    for (int d0 = 0; d0 <= max_d0; ++d0)
        for (int d1 = 0; d1 <= d0 + 2; ++d1)
            for (int d2 = 0; d2 <= d0 + 2; ++d2)
                for (int d3 = 0; d3 <= d2; ++d3) {
                    const CurveClass d{d0, d1, d2, d3};
                    const CurveClass ds{d0, d1, d3, d2};
                    record(rep, nlog_closed(d) == nlog_closed(ds), "d=" + to_string(d));
                }
    for (int a = 0; a <= box.a; ++a)
        for (int b = 0; b <= box.b; ++b)
            for (int c = 0; c <= box.c; ++c)
                for (int d = 0; d <= c; ++d)
                    for (int e = 0; e <= box.e; ++e) {
                        const GParams p{a, b, c, d, e};
                        const GParams ps{a, b, d, c, e};
                        record(rep, g_closed(p) == g_closed(ps) && g_enum(p) == g_enum(ps),
                               "G" + to_string(p));
                    }
    return rep;
}

}  // namespace qvl
