#pragma once

#include "braceforge/brace.hpp"
#include "braceforge/solution.hpp"

namespace fixtures {

using namespace braceforge;

// two points, both rows the transposition (0 1)
inline Solution swap2() {
    return validate_solution({{1, 0}, {1, 0}});
}

// order-4 brace on (Z/2)^2, lambda_v = swap^(weight of v):
// elements 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1), coordinate swap for odd weight
inline FiniteBrace b4() {
    std::vector<Perm> perms{Perm::identity(2), Perm({1, 0}), Perm({1, 0}), Perm::identity(2)};
    return FiniteBrace::from_vector_form(2, 2, std::move(perms));
}

// the solution associated with b4: size 4, rows [id, (1 2), (1 2), id]
inline Solution sol4() {
    return validate_solution({{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 1, 3}, {0, 1, 2, 3}});
}

} // namespace fixtures
