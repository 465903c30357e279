#pragma once

#include "wpx/lcs.hpp"
#include "wpx/model.hpp"

#include <string>
#include <vector>

namespace wpx
{

struct ChainEntry
{
    PlanningProblem subproblem;
    LocationId location = 0;
    std::string name;
    // Index of the symbol in the source LCS.
    std::size_t position = 0;
};

struct WaypointChain
{
    std::vector< ChainEntry > entries;
    PathString lcs;
    // Consecutive repeats of a location in the LCS were merged.
    bool merged_repeats = false;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
    [[nodiscard]] PathString locations() const;
};

// entries[i] = alpha(problem, lcs[i]) with consecutive repeats merged.
WaypointChain chain_from_lcs( const PlanningProblem& problem, const LcsResult& lcs );

// Every path contains the chain's locations, in order, as a subsequence.
bool verify_chain_abstract( const PathSet& paths, const WaypointChain& chain );

} // namespace wpx
