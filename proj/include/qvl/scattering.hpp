#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "qvl/curve.hpp"
#include "qvl/laurent.hpp"

namespace qvl {

/// Lattice vector in the scattering plane.
struct Vec2 {
    int x = 0, y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    auto operator<=>(const Vec2&) const = default;
};

/// det(u, v) = u.x v.y - u.y v.x.
inline long long det(const Vec2& u, const Vec2& v) {
    return static_cast<long long>(u.x) * v.y - static_cast<long long>(u.y) * v.x;
}

/// Exponents of the bookkeeping variables (t, t1, t2, t3).
using TExp = std::array<int, 4>;

/// One wall of the consistent diagram, carrying the function
/// 1 + t^{t_exp} z^{rho}. rho must be primitive; non-initial walls have a
/// nonzero t-monomial.
struct Wall {
    Wall(Vec2 rho, TExp t_exp);  ///< throws std::invalid_argument unless rho is primitive

    Vec2 rho;
    TExp t_exp;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Perturbative scattering of two walls whose directions span the lattice
/// (|det(rho1, rho2)| = 1, else std::domain_error): a single new wall with
/// exponent rho1 + rho2 and t-monomial the product of the inputs'.
Wall scatter_simple(const Wall& w1, const Wall& w2);

/// Scattering of two walls with |det(rho1, rho2)| = 2 (else
/// std::domain_error): the two infinite families of new walls, truncated at
/// n_max. For n = 1..n_max emits the wall with exponent (n+1)rho1 + n*rho2
/// followed by the one with n*rho1 + (n+1)rho2 (the central wall, which never
/// carries a first-power t-monomial, is omitted). Precondition n_max >= 1.
std::vector<Wall> scatter_infinite(const Wall& w1, const Wall& w2, int n_max);

/// Full wall catalog of the consistent diagram truncated at tuple n_max
/// (std::domain_error unless n_max >= 1), in the crossing order a broken line
/// from the relevant quadrant meets them: n = n_max down to 1, within each
/// tuple W1, W2, W3, W4 where
///   W1(n): t-monomial t^{n+1} t1^n t2 t3, rho = (-1, 2(n-1))
///   W2(n): t^n t1^{n-1},                  rho = (-1, 2(n-1))
///   W3(n): t^n t1^{n-1} t3,               rho = (-1, 2n-3)
///   W4(n): t^n t1^{n-1} t2,               rho = (-1, 2n-3).
std::vector<Wall> wall_catalog(int n_max);

/// Line-oriented dump of the catalog, one wall per line:
/// "n=<n> label=<W1..W4> rho=(a,b) t=(e0,e1,e2,e3)".
std::string wall_catalog_text(int n_max);

/// One branch of a broken line: coefficient times t^{t_exp} z^{z_exp}.
struct TrackedMonomial {
    LaurentPoly coeff;
    TExp t_exp{0, 0, 0, 0};
    Vec2 z_exp;

    friend bool operator==(const TrackedMonomial&, const TrackedMonomial&) = default;
};

/// Wall-crossing of a single monomial: with Dt = |det(rho_wall, z_exp)| the
/// transform expands into Dt+1 branches, branch k carrying the coefficient
/// factor [Dt ch k], t_exp shifted by k*t_exp_wall and z_exp by k*rho_wall.
/// Dt = 0 returns the monomial unchanged.
std::vector<TrackedMonomial> cross_wall(const TrackedMonomial& m, const Wall& w);

struct TraceOptions {
    bool prune = true;      ///< drop branches whose t-exponent already exceeds the target
    int extra_depth = 0;    ///< cross the catalog truncated at d0 + extra_depth
    std::ostream* debug = nullptr;  ///< wall-by-wall trace log
};

/// Log generating function read off the scattering diagram: starts the broken
/// line as z^{(0, -(d2+d3))}, crosses the full catalog truncated at tuple d0,
/// and sums the coefficients of the branches landing on
/// t^{(d0, d0-d1, d0-d2, d0-d3)} z^{(-d1, -2 d1)}. Requires both intersection
/// numbers positive (std::domain_error otherwise); d0 < 1 gives exact 0.
LaurentPoly trace_nlog(const CurveClass& d, const TraceOptions& opt = {});

}  // namespace qvl
