#pragma once

#include <compare>
#include <string>
#include <utility>

namespace qvl {

/// Effective curve class d = d0*H - d1*E1 - d2*E2 - d3*E3 on the cubic del
/// Pezzo surface, written against the hyperplane and exceptional classes.
struct CurveClass {
    int d0 = 0, d1 = 0, d2 = 0, d3 = 0;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
    auto operator<=>(const CurveClass&) const = default;
};

/// Intersection numbers (d·D1, d·D2) against the divisor pair
/// D1 = E1, D2 = H - E2 - E3 (bidegree 0 and 2 on the anticanonical split).
inline std::pair<int, int> inter(const CurveClass& d) {
    return {d.d1, d.d2 + d.d3};
}

/// Chamber of classes on which the closed form has all binomial arguments in
/// range: 0 <= d0-d1 <= d3, 0 <= d0-d2 <= d3, 0 <= d3 <= d0 and
/// d3 <= d1+d2+d3-d0. Outside it every generating function below is 0.
inline bool admissible(const CurveClass& d) {
    return 0 <= d.d0 - d.d1 && d.d0 - d.d1 <= d.d3 &&
           0 <= d.d0 - d.d2 && d.d0 - d.d2 <= d.d3 &&
           0 <= d.d3 && d.d3 <= d.d0 &&
           d.d3 <= d.d1 + d.d2 + d.d3 - d.d0;
}

int class_gcd(const CurveClass& d);                 ///< gcd of the components
CurveClass divide_class(const CurveClass& d, int k); ///< componentwise d/k; pre: k divides

std::string to_string(const CurveClass& d);

/// Argument tuple (a, b, c, d, e) of the deformed block sum G.
struct GParams {
    int a = 0, b = 0, c = 0, d = 0, e = 0;

    friend bool operator==(const GParams&, const GParams&) = default;
    auto operator<=>(const GParams&) const = default;
};

/// Parameter restriction carrying a curve class into G's argument tuple:
/// the log generating function of d equals G(d0, d1, d0-d2, d0-d3, d2+d3)
/// whenever both intersection numbers are positive.
inline GParams nlog_params(const CurveClass& d) {
    return {d.d0, d.d1, d.d0 - d.d2, d.d0 - d.d3, d.d2 + d.d3};
}

std::string to_string(const GParams& p);

}  // namespace qvl
