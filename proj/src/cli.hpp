#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qvl/curve.hpp"
#include "qvl/verify.hpp"

namespace qvl::cli {

/// Everything one CLI invocation resolved to. Identical configs produce
/// byte-identical stdout.
struct RunConfig {
    std::string command;           ///< invariant | verify | table
    std::string selector;          ///< log | open | lmov | gv | dt | g
    std::string campaign;          ///< verify only
    std::string pipeline = "all";  ///< closed | sum | trace | all
    std::string format = "json";   ///< json | csv | text
    std::optional<CurveClass> degree;
    std::optional<GParams> gparams;
    int max_d0 = -1;               ///< -1 = per-command default
    std::optional<Box> box;
    int qps_max = -1;
    std::string cache_path;        ///< table only; falls back to $QVL_CACHE
    int jobs = 1;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Exit codes: 0 success, 1 verification/integrality failure or pipeline
/// disagreement, 2 invalid input.
int exit_for(const VerifyReport& rep);

/// Full CLI: parses args (without the program name), dispatches, writes to
/// the given streams, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qvl::cli
