#pragma once

#include <vector>

#include "qvl/curve.hpp"
#include "qvl/laurent.hpp"

namespace qvl {

/// Moebius function; throws std::domain_error for k < 1.
int mobius(int k);

/// Ascending positive divisors of gcd(d0, d1, d2, d3). Requires a nonzero
/// class (the bps layer only meets classes with d·D1 > 0). Always contains 1.
std::vector<int> class_divisors(const CurveClass& d);

/// Genus-0 log invariant: exact q -> 1 limit of the closed-form log series.
/// Requires both intersection numbers positive (std::domain_error otherwise).
Rational genus0_log(const CurveClass& d);

/// Genus-0 local invariant of the associated local geometry:
///   ((-1)^{d1-1}/d1) ((-1)^{d2+d3-1}/(d2+d3)) * genus0_log(d).
Rational local_genus0(const CurveClass& d);

/// Genus-0 Gopakumar-Vafa invariant via Moebius inversion,
///   gv(d) = sum_{k | gcd d} mobius(k)/k^2 * local_genus0(d/k),
/// asserted integral (IntegralityError otherwise).
Int gv(const CurveClass& d);

/// LMOV invariant assembled from the log series:
///   lmov(d) = [1]^2 / ([d1][d2+d3]) *
///             sum_{k | gcd d} (-1)^{(d1+d2+d3)/k} mobius(k) * nlog(d/k)|_{q->q^k},
/// where nlog(d/k) enters in its polynomial form (the block-sum value).
/// The two exact divisions must succeed and the result must live in
/// Z[q, q^{-1}], i.e. carry only even s-exponents (IntegralityError otherwise).
LaurentPoly lmov(const CurveClass& d);

/// The same invariant assembled from the open series:
///   [1]^2 * (d1/[d1]) * sum_{k | gcd d} mobius(k)/k * open(d/k)|_{q->q^k},
/// evaluated in exact rational-function arithmetic and then divided out to a
/// Laurent polynomial. Must equal lmov(d).
LaurentPoly lmov_from_open(const CurveClass& d);

/// Numerical Donaldson-Thomas invariant |gv(d)|.
Int dt_num(const CurveClass& d);

}  // namespace qvl
