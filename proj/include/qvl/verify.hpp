#pragma once

#include <string>

namespace qvl {

/// Inclusive upper bounds for sweeps over G arguments (a, b, c, d, e).
struct Box {
    int a = 4, b = 4, c = 3, d = 3, e = 8;
};

/// Outcome of one exhaustive verification campaign.
struct VerifyReport {
    std::string campaign;
    long long checked = 0;
    long long failed = 0;
    std::string first_counterexample;  ///< empty when everything passed

    bool ok() const { return failed == 0; }
};

/// Block-sum value equals the telescoped closed form on the box
/// 0 <= a,b,c,d <= bounds, 0 <= e <= bounds.e.
VerifyReport verify_g_identity(const Box& box);

/// Closed form equals the block-sum pipeline for every class with
/// d0 <= max_d0, 0 <= d1,d2,d3 <= d0+2 and both intersections positive.
VerifyReport verify_scat_vs_closed(int max_d0);

/// Broken-line tracer equals the block-sum pipeline on the same family.
VerifyReport verify_trace_vs_scat(int max_d0);

/// open_closed equals open_from_log on admissible classes with positive
/// intersections (d0 <= max_d0); admissible classes with a vanishing
/// intersection must give exact 0.
VerifyReport verify_log_open(int max_d0);

/// One-step recursion for the block sum on 1 <= a <= box.a, 1 <= b <= box.b,
/// 0 <= c <= box.c, 0 <= d <= box.d, 0 <= e <= box.e.
VerifyReport verify_recursion(const Box& box);

/// Same kernel applied to a single deformation block.
VerifyReport verify_gtilde_recursion(const Box& box);

/// Balanced q-Pfaff-Saalschuetz identity for all 0 <= A,B,C,D <= max_abcd.
VerifyReport verify_qps(int max_abcd);

/// Integrality of gv and lmov, and agreement of the two lmov assemblies, on
/// admissible classes with positive intersections, d0 <= max_d0.
VerifyReport verify_integrality(int max_d0);

/// Symmetries: q-binomial bottom reflection and bar-palindromicity up to
/// qalg_n, d2 <-> d3 for the closed log form up to max_d0, c <-> d for both
/// the block sum and its closed form on the box.
VerifyReport verify_symmetry(int max_d0, const Box& box, int qalg_n = 12);

}  // namespace qvl
