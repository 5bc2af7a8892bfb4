#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qvl/curve.hpp"
#include "qvl/laurent.hpp"

namespace qvl {

/// Finitely supported exponent matrix (k_{i,n})_{i=1..4, n>=1} indexing one
/// summand of the block sum G. Row n is stored at rows[n-1]; trailing all-zero
/// rows are trimmed so equal matrices compare equal.
struct KMatrix {
    std::vector<std::array<int, 4>> rows;

    /// Entry k_{i,n}, i in 1..4, n >= 1; zero outside the stored support.
    int k(int i, int n) const {
        if (n < 1 || n > static_cast<int>(rows.size())) return 0;
        return rows[static_cast<size_t>(n - 1)][static_cast<size_t>(i - 1)];
    }

    void trim();

    /// The four linear constraints tying the matrix to (a, b, c, d):
    ///   a = sum (n + [i=1]) k_{i,n},  b = sum k_{i,n},
    ///   c = sum (k_{1,n} + k_{4,n}),  d = sum (k_{1,n} + k_{3,n}).
    bool satisfies(const GParams& p) const;

    friend bool operator==(const KMatrix&, const KMatrix&) = default;
    bool operator<(const KMatrix& rhs) const { return rows < rhs.rows; }
};

/// All exponent matrices satisfying the constraints of p. Entries vanish for
/// n > a, so the search space is finite; depth-first over n = a..1 and
/// i = 1..4 with partial-sum pruning.
std::vector<KMatrix> enumerate_k(const GParams& p);

/// The block sum G(a,b,c,d,e): over every matrix of enumerate_k, the product
/// over n of
///   [TopA(n) ch k_{1,n}] [TopA(n) ch k_{2,n}] [TopB(n) ch k_{3,n}] [TopB(n) ch k_{4,n}]
/// where TopA(n) = e - sum_{m>=1} (2m (k_{1,n+m}+k_{2,n+m}) + (2m-1)(k_{3,n+m}+k_{4,n+m}))
/// and   TopB(n) = e - sum_{m>=0} ((2m+1)(k_{1,n+m}+k_{2,n+m}) + 2m (k_{3,n+m}+k_{4,n+m})).
/// Binomials are read in the extended sense (qbinom_ext): the tops go
/// negative inside the sum even for e >= 0, and the infinite tail of
/// [e ch 0] factors is identically 1. Matches g_closed for every integer e;
/// on restricted classes the tops stay in classical range.
LaurentPoly g_enum(const GParams& p);

/// Log generating function computed through the block sum: requires both
/// intersection numbers positive (std::domain_error otherwise), then
/// evaluates g_enum on nlog_params(d).
LaurentPoly nlog_scat(const CurveClass& d);

/// Binomial tops (X, Y) of the one-step recursion kernel:
///   X = e - 2a + 2b + c + d - k3 - k4,  Y = e - 2a + b + c + d.
/// X is invariant under (a, e) -> (a-1, e-2); Y likewise.
std::pair<int, int> recursion_kernel_tops(const GParams& p, int k3, int k4);

/// Right-hand side of the one-step recursion
///   G(a,b,c,d,e) = sum_{k1..k4 >= 0} [X ch k1][X ch k2][Y ch k3][Y ch k4]
///                  * G(a-b-k1, b-k1-k2-k3-k4, c-k1-k4, d-k1-k3, e),
/// kernel binomials in the extended reading, with the sum finite because G
/// vanishes unless all four shifted arguments are non-negative.
/// Preconditions a > 0, b > 0, c >= 0, d >= 0 (std::domain_error otherwise).
/// Inner values use the closed form.
LaurentPoly g_recursion_rhs(const GParams& p);

/// LHS/RHS pair of the same recursion kernel applied to a single block
/// gtilde(a,b,c,d,e); equality is the telescoping step behind g_closed.
/// Preconditions a > 0, b > 0.
std::pair<LaurentPoly, LaurentPoly> gtilde_recursion_check(const GParams& p);

/// LHS/RHS pair of the balanced q-Pfaff-Saalschuetz identity
///   sum_{k>=0} [A+B+C+D-k]! / ([k]![A-k]![B-k]![C-k]![D+k]!)
///     = [A+B+D ch B][A+C+D ch A][B+C+D ch C],
/// summands with any negative factorial argument contributing 0. The LHS is
/// assembled over the common denominator [m]![A]![B]![C]![D+m]!, m = min(A,B,C),
/// so that each summand is a pure polynomial product, then divided exactly.
/// Preconditions A, B, C, D >= 0 (std::domain_error otherwise).
std::pair<LaurentPoly, LaurentPoly> qps_check(int A, int B, int C, int D);

}  // namespace qvl
