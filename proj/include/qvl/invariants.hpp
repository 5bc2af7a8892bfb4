#pragma once

#include "qvl/curve.hpp"
#include "qvl/laurent.hpp"
#include "qvl/qrational.hpp"

namespace qvl {

/// All-genus log generating function in closed form,
///
///   nlog(d) = [d1][d2+d3] / ([d0][d1+d2+d3-d0])
///             * [d3 ch d0-d1][d3 ch d0-d2][d0 ch d3][d1+d2+d3-d0 ch d3],
///
/// with the convention that a vanishing numerator yields exact 0 (the
/// denominator never vanishes when the numerator does not).
QRational nlog_closed(const CurveClass& d);

/// All-genus open generating function in closed form,
///
///   open(d) = (-1)^{d1+d2+d3} [d1] / (d1 [d0][d1+d2+d3-d0]) * (same binomials),
///
/// and exact 0 when d1 = 0.
QRational open_closed(const CurveClass& d);

/// The open series recovered from the log one through the comparison factor
/// ((-1)^{d1-1}/d1) ((-1)^{d2+d3-1}/[d2+d3]). Throws std::domain_error unless
/// both intersection numbers d·D1, d·D2 are positive.
QRational open_from_log(const CurveClass& d);

/// One-parameter deformation block
///   gtilde(a,b,c,d,e) = [b-a+e ch b-c][c-a+d+e ch c][a-c ch d][a-d ch b-d].
/// The two e-carrying binomials are read in the extended sense (qbinom_ext,
/// so a negative top with bottom 0 gives 1); the last two vanish outside the
/// classical range. This split is forced: the telescoped difference must
/// vanish at a = 0 (last two factors kill the shifted block) yet still cancel
/// against the block sum when e-a goes negative (first two factors survive).
LaurentPoly gtilde(const GParams& p);

/// Telescoped closed form of the block sum:
///   g_closed(a,b,c,d,e) = gtilde(a,b,c,d,e) - gtilde(a-1,b,c,d,e-2).
LaurentPoly g_closed(const GParams& p);

}  // namespace qvl
