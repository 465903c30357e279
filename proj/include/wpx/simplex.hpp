#pragma once

#include "wpx/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpx
{

// Pure feasibility problem: no objective.
struct LpProblem
{
    std::vector< std::string > variable_names;
    std::vector< LinearConstraint > constraints;

    [[nodiscard]] std::size_t variable_count() const { return variable_names.size(); }
    VarId add_variable( std::string name );
};

enum class Status
{
    sat,
    unsat,
};

const char* status_name( Status status );

struct Verdict
{
    Status status = Status::unsat;
    // One value per LP variable; present iff SAT.
    std::optional< std::vector< Rational > > witness;
    std::uint64_t paths_checked = 0;

    [[nodiscard]] bool sat() const { return status == Status::sat; }
};

struct SimplexStats
{
    std::size_t eliminated = 0;
    std::size_t rows = 0;
    std::size_t pivots = 0;
};

// Exact decision over the rationals. Equalities are eliminated by
// substitution, single-variable rows become bounds, and the rest goes to a
// bounded phase-I simplex with Bland's rule. A SAT witness is re-checked
// against the original constraints; a mismatch throws InternalError.
Verdict lp_feasible( const LpProblem& lp, SimplexStats* stats = nullptr );

// Plain-text listing: one variable per line, then one constraint per line.
std::string format_lp( const LpProblem& lp );

} // namespace wpx
