#pragma once

#include <optional>
#include <vector>

#include "braceforge/perm.hpp"

namespace braceforge {

// Finite non-degenerate involutive set-theoretic solution of the YBE on
// {0..size-1}. lambda[x][y] = ^x y, rho[x][y] = x^y. Immutable once built
// through validate_solution / trivial_solution.
struct Solution {
    int size = 0;
    std::vector<std::vector<int>> lambda;
    std::vector<std::vector<int>> rho;

    bool is_trivial() const;
    bool operator==(const Solution& other) const {
        return size == other.size && lambda == other.lambda;
    }
};

struct RetractQuotient {
    int parent_size = 0;
    std::vector<int> class_of; // parent index -> class index
    Solution retracted;
};

// Marker for solutions whose retraction tower never reaches one point.
struct MplResult {
    bool finite = false;
    int level = -1; // valid when finite

    bool operator==(const MplResult& o) const {
        return finite == o.finite && (!finite || level == o.level);
    }
};

inline MplResult mpl_finite(int level) { return {true, level}; }
inline MplResult mpl_infinite() { return {false, -1}; }

// Checks non-degeneracy, involutivity and the braid relation on all triples.
// When rho is absent it is derived via x^y = lambda^{-1}_{lambda_x(y)}(x);
// when present it is cross-checked against the derived table.
Solution validate_solution(const std::vector<std::vector<int>>& lambda,
                           const std::vector<std::vector<int>>* rho = nullptr);

Solution trivial_solution(int m);

RetractQuotient retract(const Solution& S);

MplResult mpl(const Solution& S);

// Bijection phi with phi(^x y) = ^{phi x}(phi y) for all x,y, or nullopt.
std::optional<std::vector<int>> isomorphism(const Solution& S1, const Solution& S2);

inline bool is_isomorphic(const Solution& S1, const Solution& S2) {
    return isomorphism(S1, S2).has_value();
}

// The rows lambda_x as permutations, index-aligned with X.
std::vector<Perm> permutation_generators(const Solution& S);

// Restriction to a subset closed under both actions; indices are renumbered
// by the sorted order of the subset.
Solution subsolution(const Solution& S, const std::vector<int>& subset);

// Lexicographically minimal lambda table over all relabelings; used for
// isomorphism-class canonical forms in the census.
std::vector<std::vector<int>> canonical_lambda(const Solution& S);

} // namespace braceforge
