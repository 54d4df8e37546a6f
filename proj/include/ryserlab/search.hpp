#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ryserlab/design.hpp"
#include "ryserlab/feasibility.hpp"

namespace ryserlab {

// Per-task limits.  max_solutions and node_budget are enforced per search
// task (one task per admissible non-average first-block size), which keeps
// results independent of thread count.  budget_secs is a wall-clock cutoff
// and is the one knob that makes output timing-dependent; it is off by
// default and meant for exploratory runs only.
struct SearchLimits {
    long long max_solutions = -1;          // per task, -1 = unlimited
    unsigned long long node_budget = 0;    // per task, 0 = unlimited
    double budget_secs = 0.0;              // per task wall clock, 0 = off
    int point_cap = 13;                    // refuse instances above this v
};

// Optional pruning rules.  Disabling any of them changes node counts but
// never the solution set; the always-on core already guarantees soundness.
struct PruneToggles {
    bool column_sums = true;   // replication commitment bounds
    bool tau_bounds = true;    // committed heavy/light points per block
    bool size_multiset = true; // mid-search block-size completion check
};

enum class SearchStatus {
    Complete,   // the whole tree was explored
    Incomplete, // some task hit a budget or the solution cap
    Infeasible, // no admissible size multiset meets the column-sum total
};

struct SearchSolution {
    IncidenceStructure design; // weakly canonical form
    bool type1 = false;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Complete;
    std::vector<SearchSolution> solutions; // canonically sorted, deduped
    long long found = 0;                   // distinct solutions before truncation
    unsigned long long nodes = 0;          // committed row placements
    double wall_secs = 0.0;                // informational, never in reports
};

struct SearchSpec {
    ParameterTuple tuple;
    SearchLimits limits;
    PruneToggles prunes;
};

// Exhaustive backtracking search for designs realizing the tuple.  Row
// candidates are generated as count vectors over column groups (columns
// currently indistinguishable by the placed rows), so any two structures
// differing only by column order are explored once.  Rows from the third on
// must be lexicographically non-increasing in those counts, which breaks row
// order symmetry without losing solutions.  Returned structures classify as
// Ryser designs matching the tuple and are deduped by weak canonical form.
SearchResult search_designs(const SearchSpec& spec, int jobs = 1);

// The admissible block sizes for a tuple: every size of the form
// 2*lambda + t*a that fits between r2 and r1 and exceeds lambda.
std::vector<int> admissible_sizes(const ParameterTuple& t);

struct Type2Row {
    ParameterTuple tuple;
    Verdict verdict;
    SearchStatus status = SearchStatus::Complete;
    long long solutions = 0;
    long long type2 = 0;
    unsigned long long nodes = 0;
};

struct Type2Report {
    std::vector<Type2Row> rows;
    bool any_type2 = false;
    bool all_complete = true;
};

// Runs search_designs over every surviving tuple (verdict not eliminated)
// with the given lambda and v <= v_cap, counting solutions that are not
// obtainable from a symmetric design.
Type2Report search_type2(long long lambda, long long v_cap,
                         const SearchLimits& limits = {},
                         const PruneToggles& prunes = {}, int jobs = 1);

} // namespace ryserlab
