#pragma once

#include "qvl/laurent.hpp"

namespace qvl {

/// Balanced q-integer [n] = q^{n/2} - q^{-n/2} = s^n - s^{-n}.
/// [0] = 0 and [-n] = -[n].
LaurentPoly qint(int n);

/// Balanced q-factorial [n]! = [1][2]...[n], [0]! = 1.
/// Throws std::domain_error for n < 0.
LaurentPoly qfact(int n);

/// Balanced q-binomial [n choose m] = [n]! / ([m]! [n-m]!), computed by exact
/// division of factorial products. Returns 0 whenever m < 0, n < 0 or m > n;
/// in range the division is exact and the result is a Laurent polynomial
/// with non-negative coefficients, invariant under the bar involution.
LaurentPoly qbinom(int n, int m);

/// q-binomial continued to negative upper argument by the falling product
/// [n][n-1]...[n-m+1] / [m]!, the q-analogue of the binomial series
/// coefficient: [n ch 0] = 1 for every n, and for n < 0
/// [n ch m] = (-1)^m [m-n-1 ch m] (balanced brackets obey [-k] = -[k], so no
/// stray power of q appears). Agrees with qbinom for n >= 0. This is the
/// reading under which the block sum, its telescoped closed form and the
/// one-step recursion hold for all integer e.
LaurentPoly qbinom_ext(int n, int m);

}  // namespace qvl
