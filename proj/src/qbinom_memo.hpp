#pragma once

#include "qvl/laurent.hpp"

namespace qvl::detail {

/// Shared memo over qbinom. The hot layers (block sums, recursion sweeps,
/// wall crossing) evaluate the same small set of q-binomials millions of
/// times; this keeps them pure while amortising the exact divisions.
/// Thread-safe; recomputation of a key is idempotent and harmless.
const LaurentPoly& qbinom_memo(int n, int m);

/// Same memo discipline over qbinom_ext (the falling-product continuation).
const LaurentPoly& qbinom_ext_memo(int n, int m);

}  // namespace qvl::detail
