#pragma once

#include <string>
#include <vector>

#include "braceforge/solution.hpp"

namespace braceforge {

struct CensusRecord {
    Solution solution;
    MplResult mpl;
    long long perm_group_order = 0;
    long long embedded_brace_order = -1; // -1 when capped
    bool right_nilpotent = false;
    bool left_nilpotent = false;
    bool two_sided = false;
    std::string error; // per-record cap overruns, empty otherwise
};

// All valid solutions on m points in lexicographic lambda-table order.
// Backtracking over lambda rows with partial right-action injectivity and
// partial braid pruning; every leaf goes through validate_solution.
// With up_to_iso, keeps the lexicographically minimal representative of
// each isomorphism class.
std::vector<Solution> enumerate_solutions(int m, bool up_to_iso, int max_size = 5);

// Runs the solution/structure-group/brace pipelines over the enumerated
// corpus (up to isomorphism).
std::vector<CensusRecord> build_census(int m, long long cap = 1000000);

} // namespace braceforge
