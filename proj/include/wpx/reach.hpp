#pragma once

#include "wpx/graph.hpp"
#include "wpx/model.hpp"
#include "wpx/simplex.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace wpx
{

// locations[i] --transitions[i]--> locations[i + 1]
struct ConcretePath
{
    std::vector< LocationId > locations;
    std::vector< TransitionId > transitions;

    [[nodiscard]] std::size_t length() const { return transitions.size(); }

    friend bool operator==( const ConcretePath&, const ConcretePath& ) = default;
};

// Transition-level walks source -> goal with at most `max_transitions`
// steps, ascending by length and then by transition-id sequence. Throws
// ResourceError (reachability stage) above `cap`.
std::vector< ConcretePath > enumerate_concrete_paths( const HybridAutomaton& automaton, LocationId source,
                                                      LocationId goal, std::size_t max_transitions,
                                                      std::size_t cap = default_path_cap );

std::uint64_t count_concrete_paths( const HybridAutomaton& automaton, LocationId source, LocationId goal,
                                    std::size_t max_transitions );

struct PathEncoding
{
    LpProblem lp;
    // entry[i][x], exit[i][x], dwell[i] for path position i.
    std::vector< std::vector< VarId > > entry;
    std::vector< std::vector< VarId > > exit;
    std::vector< VarId > dwell;
};

// Endpoint encoding of one path: Init on the first entry, the invariant on
// every entry and exit, rate bounds on each dwell, guards and resets on each
// transition, the goal region on the final exit. Throws PreconditionError
// when the path does not run from the problem's init to its goal location.
PathEncoding encode_path( const PlanningProblem& problem, const ConcretePath& path );

// Same constraints without the goal; the path may end anywhere.
PathEncoding encode_prefix( const PlanningProblem& problem, const ConcretePath& path );

enum class SearchMode
{
    // Prefix LPs cut every extension of an infeasible prefix.
    pruned,
    // One full LP per concrete path, in order.
    exhaustive,
};

struct ReachOptions
{
    std::size_t max_paths = default_path_cap;
    std::size_t parallelism = 1;
    SearchMode mode = SearchMode::pruned;
    std::optional< std::filesystem::path > dump_dir;
};

struct ReachResult
{
    Verdict verdict;
    // First feasible path in enumeration order, with its run and plan.
    std::optional< ConcretePath > path;
    std::optional< WitnessRun > run;
    std::optional< Plan > plan;
    std::uint64_t lps_solved = 0;
};

// SAT iff some concrete path within the depth bound has a feasible LP; the
// result is always the one a sequential scan in enumeration order gives,
// paths_checked included, whatever the mode or parallelism.
ReachResult bounded_reachable( const PlanningProblem& problem, const ReachOptions& options = {} );

// Run and plan from a SAT verdict on `path`. Throws PreconditionError on UNSAT.
std::pair< WitnessRun, Plan > extract_witness( const PlanningProblem& problem, const Verdict& verdict,
                                               const ConcretePath& path );

} // namespace wpx
