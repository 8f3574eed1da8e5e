#pragma once

#include <string>
#include <vector>

#include "pellforge/mpoly.hpp"

namespace pellforge {

// One replayable reduction step. LinearSubst stores var = expr over the
// surviving variables; Resultant stores the pivot equation so the variable
// can be recovered as a root of the pivot at a downstream solution.
struct EliminationStep {
    enum class Kind { LinearSubst, Resultant };
    Kind kind;
    std::string var;
    RatFunc expr;  // LinearSubst only
    MPoly pivot;   // Resultant only
};

// A finite set of equations over the integers with a named variable set and
// the provenance trail of substitutions/resultants that produced it.
struct PolySystem {
    VarList vars;
    std::vector<MPoly> eqs;
    std::vector<EliminationStep> trail;
    std::vector<std::string> warnings;  // e.g. PositiveDimensional notices

    std::vector<std::string> active_vars() const;
    bool is_active(const std::string& v) const;
};

}  // namespace pellforge
