#include "qvl/gsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "qbinom_memo.hpp"
#include "qvl/invariants.hpp"
#include "qvl/qcomb.hpp"

namespace qvl {

using detail::qbinom_memo;

void KMatrix::trim() {
    while (!rows.empty() && rows.back() == std::array<int, 4>{0, 0, 0, 0}) rows.pop_back();
}

bool KMatrix::satisfies(const GParams& p) const {
    int a = 0, b = 0, c = 0, d = 0;
    for (int n = 1; n <= static_cast<int>(rows.size()); ++n) {
        const auto& r = rows[static_cast<size_t>(n - 1)];
        a += (n + 1) * r[0] + n * (r[1] + r[2] + r[3]);
        b += r[0] + r[1] + r[2] + r[3];
        c += r[0] + r[3];
        d += r[0] + r[2];
    }
    return a == p.a && b == p.b && c == p.c && d == p.d;
}

namespace {

struct KSearch {
    std::vector<KMatrix>* out;
    KMatrix current;

    // remaining budgets for the four linear constraints
    void descend(int n, int ra, int rb, int rc, int rd) {
        if (n == 0) {
            if (ra == 0 && rb == 0 && rc == 0 && rd == 0) {
                KMatrix km = current;
                km.trim();
                out->push_back(std::move(km));
            }
            return;
        }
        auto& row = current.rows[static_cast<size_t>(n - 1)];
        // k_{1,n} weighs n+1 on a and touches every constraint
        for (int k1 = 0; (n + 1) * k1 <= ra && k1 <= rb && k1 <= rc && k1 <= rd; ++k1) {
            const int a1 = ra - (n + 1) * k1, b1 = rb - k1, c1 = rc - k1, d1 = rd - k1;
            for (int k2 = 0; n * k2 <= a1 && k2 <= b1; ++k2) {
                const int a2 = a1 - n * k2, b2 = b1 - k2;
                for (int k3 = 0; n * k3 <= a2 && k3 <= b2 && k3 <= d1; ++k3) {
                    const int a3 = a2 - n * k3, b3 = b2 - k3, d3 = d1 - k3;
                    for (int k4 = 0; n * k4 <= a3 && k4 <= b3 && k4 <= c1; ++k4) {
                        row = {k1, k2, k3, k4};
                        descend(n - 1, a3 - n * k4, b3 - k4, c1 - k4, d3);
                    }
                }
            }
        }
        row = {0, 0, 0, 0};
    }
};

}  // namespace

std::vector<KMatrix> enumerate_k(const GParams& p) {
    std::vector<KMatrix> out;
    if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0) return out;
    if (p.a == 0) {
        if (p.b == 0 && p.c == 0 && p.d == 0) out.push_back(KMatrix{});
        return out;
    }
    KSearch search{&out, KMatrix{}};
    search.current.rows.assign(static_cast<size_t>(p.a), {0, 0, 0, 0});
    search.descend(p.a, p.a, p.b, p.c, p.d);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

LaurentPoly g_summand(int e, const KMatrix& km) {
    const int N = static_cast<int>(km.rows.size());
    LaurentPoly prod(1);
    for (int n = 1; n <= N && !prod.is_zero(); ++n) {
        int topA = e, topB = e;
        for (int m = 1; n + m <= N; ++m) {
            const auto& r = km.rows[static_cast<size_t>(n + m - 1)];
            topA -= 2 * m * (r[0] + r[1]) + (2 * m - 1) * (r[2] + r[3]);
        }
        for (int m = 0; n + m <= N; ++m) {
            const auto& r = km.rows[static_cast<size_t>(n + m - 1)];
            topB -= (2 * m + 1) * (r[0] + r[1]) + 2 * m * (r[2] + r[3]);
        }
        const auto& r = km.rows[static_cast<size_t>(n - 1)];
        prod *= detail::qbinom_ext_memo(topA, r[0]);
        prod *= detail::qbinom_ext_memo(topA, r[1]);
        prod *= detail::qbinom_ext_memo(topB, r[2]);
        prod *= detail::qbinom_ext_memo(topB, r[3]);
    }
    return prod;
}

}  // namespace

LaurentPoly g_enum(const GParams& p) {
    // rows above the support contribute [e ch 0] = 1 in the extended reading,
    // so the value is well defined for every integer e
    LaurentPoly total;
    for (const KMatrix& km : enumerate_k(p)) total += g_summand(p.e, km);
    return total;
}

LaurentPoly nlog_scat(const CurveClass& d) {
    auto [w1, w2] = inter(d);
    if (w1 <= 0 || w2 <= 0)
        throw std::domain_error("nlog_scat: needs positive intersection with both divisors");
    return g_enum(nlog_params(d));
}

std::pair<int, int> recursion_kernel_tops(const GParams& p, int k3, int k4) {
    return {p.e - 2 * p.a + 2 * p.b + p.c + p.d - k3 - k4, p.e - 2 * p.a + p.b + p.c + p.d};
}

namespace {

// closed-form G values, memoized for the recursion sweeps
const LaurentPoly& g_closed_memo(const GParams& p) {
    static std::shared_mutex mutex;
    static std::map<GParams, LaurentPoly> table;
    {
        std::shared_lock lock(mutex);
        auto it = table.find(p);
        if (it != table.end()) return it->second;
    }
    LaurentPoly value = g_closed(p);
    std::unique_lock lock(mutex);
    return table.try_emplace(p, std::move(value)).first->second;
}

template <typename Inner>
LaurentPoly recursion_rhs(const GParams& p, Inner&& inner) {
    LaurentPoly total;
    // inner values vanish unless a-b-k1, b-sum k, c-k1-k4 and d-k1-k3 are all
    // non-negative, which bounds the sum
    const int k1_hi = std::min({p.a - p.b, p.b, p.c, p.d});
    for (int k1 = 0; k1 <= k1_hi; ++k1)
        for (int k2 = 0; k2 <= p.b - k1; ++k2)
            for (int k3 = 0; k3 <= std::min(p.b - k1 - k2, p.d - k1); ++k3)
                for (int k4 = 0; k4 <= std::min(p.b - k1 - k2 - k3, p.c - k1); ++k4) {
                    const auto [X, Y] = recursion_kernel_tops(p, k3, k4);
                    LaurentPoly kern = detail::qbinom_ext_memo(X, k1) * detail::qbinom_ext_memo(X, k2) *
                                       detail::qbinom_ext_memo(Y, k3) * detail::qbinom_ext_memo(Y, k4);
                    if (kern.is_zero()) continue;
                    kern *= inner(GParams{p.a - p.b - k1, p.b - k1 - k2 - k3 - k4,
                                          p.c - k1 - k4, p.d - k1 - k3, p.e});
                    total += kern;
                }
    return total;
}

}  // namespace

LaurentPoly g_recursion_rhs(const GParams& p) {
    if (p.a <= 0 || p.b <= 0 || p.c < 0 || p.d < 0)
        throw std::domain_error("g_recursion_rhs: needs a > 0, b > 0, c >= 0, d >= 0");
    return recursion_rhs(p, [](const GParams& q) { return g_closed_memo(q); });
}

std::pair<LaurentPoly, LaurentPoly> gtilde_recursion_check(const GParams& p) {
    if (p.a <= 0 || p.b <= 0)
        throw std::domain_error("gtilde_recursion_check: needs a > 0, b > 0");
    return {gtilde(p), recursion_rhs(p, [](const GParams& q) { return gtilde(q); })};
}

std::pair<LaurentPoly, LaurentPoly> qps_check(int A, int B, int C, int D) {
    if (A < 0 || B < 0 || C < 0 || D < 0)
        throw std::domain_error("qps_check: needs non-negative parameters");
    const int S = A + B + C + D;
    std::vector<LaurentPoly> fact(static_cast<size_t>(S + 1));
    fact[0] = LaurentPoly(1);
    for (int i = 1; i <= S; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * qint(i);

    // summands with k > m = min(A,B,C) hit a negative factorial and drop out;
    // over the common denominator F each survivor is a plain polynomial
    const int m = std::min({A, B, C});
    const LaurentPoly F =
        fact[static_cast<size_t>(m)] * fact[static_cast<size_t>(A)] * fact[static_cast<size_t>(B)] *
        fact[static_cast<size_t>(C)] * fact[static_cast<size_t>(D + m)];
    auto rising = [&](int from, int to) {  // [from+1][from+2]...[to]
        LaurentPoly r(1);
        for (int j = from + 1; j <= to; ++j) r *= qint(j);
        return r;
    };
    LaurentPoly lhs_num;
    for (int k = 0; k <= m; ++k) {
        LaurentPoly term = fact[static_cast<size_t>(S - k)];
        term *= rising(k, m);
        term *= rising(A - k, A);
        term *= rising(B - k, B);
        term *= rising(C - k, C);
        term *= rising(D + k, D + m);
        lhs_num += term;
    }
    LaurentPoly lhs = exact_div(lhs_num, F);
    LaurentPoly rhs = qbinom_memo(A + B + D, B) * qbinom_memo(A + C + D, A) * qbinom_memo(B + C + D, C);
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace qvl
