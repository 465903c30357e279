#pragma once

#include "wpx/chain.hpp"
#include "wpx/graph.hpp"
#include "wpx/lcs.hpp"
#include "wpx/reach.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wpx
{

enum class OutcomeKind
{
    discrete_infeasible,
    first_unreachable_waypoint,
    no_waypoint_explanation,
    solvable_contradiction,
};

const char* outcome_name( OutcomeKind kind );

struct WaypointVerdict
{
    LocationId location = 0;
    std::string name;
    Status status = Status::unsat;
    std::uint64_t paths_checked = 0;
    // Taken as reachable because Init lies syntactically inside Inv(l0).
    bool assumed = false;
};

struct StageTimings
{
    std::uint64_t path_enumeration_us = 0;
    std::uint64_t lcs_us = 0;
    std::uint64_t reachability_us = 0;
};

struct ExplainOptions
{
    std::size_t max_paths = default_path_cap;
    std::size_t max_candidates = default_candidate_cap;
    std::size_t parallelism = 1;
    SearchMode mode = SearchMode::pruned;
    std::optional< std::filesystem::path > dump_dir;
};

struct ExplanationReport
{
    PlanningProblem problem;
    std::size_t path_count = 0;
    std::optional< LcsResult > lcs;
    std::optional< WaypointChain > chain;
    std::vector< WaypointVerdict > verdicts;
    // Check of the exact goal region once every waypoint is reachable.
    std::optional< WaypointVerdict > goal_check;
    OutcomeKind outcome = OutcomeKind::discrete_infeasible;
    std::optional< LocationId > explanation;
    std::optional< Plan > plan;
    std::optional< WitnessRun > run;
    std::set< LocationId > articulation_points;
    std::vector< std::string > annotations;
    StageTimings timings;

    [[nodiscard]] std::size_t feasible_waypoints() const;
    // Chain entries strictly between the initial and goal locations.
    [[nodiscard]] std::size_t interior_waypoints() const;
};

// Enumerate PS, take its LCS as the waypoint chain and report the first
// waypoint that is not boundedly reachable. ResourceErrors propagate tagged
// with their stage.
ExplanationReport explain( const PlanningProblem& problem, const ExplainOptions& options = {} );

// Annotation for a chain of length two, nullopt otherwise.
std::optional< std::string > classify_trivial_chain( const ExplanationReport& report );

} // namespace wpx
