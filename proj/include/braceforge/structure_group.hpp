#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braceforge/brace.hpp"
#include "braceforge/perm.hpp"
#include "braceforge/solution.hpp"

namespace braceforge {

using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;

// Element of the structure group G(X,r) in the semidirect representation:
// an exact integer vector over the basis X plus the lambda-part restricted
// to X. Product rule: (v,p)(w,q) = (v + p.w, pq) with (p.w)[p(i)] = w[i].
struct GElement {
    BigVec vec;
    Perm perm;

    int degree() const { return (int)vec.size(); }
    bool operator==(const GElement& o) const { return vec == o.vec && perm == o.perm; }
};

GElement g_identity(int degree);
GElement g_multiply(const GElement& a, const GElement& b);
GElement g_inverse(const GElement& a);
// addition in the canonical free abelian group: acts on vec only
BigVec g_add(const BigVec& a, const BigVec& b);
BigVec g_negate(const BigVec& a);

// generator x of G(X,r): (e_x, lambda_x)
GElement generator(const Solution& S, int x);

// a*c = L_a(c) - c on vectors; linear in c since L_a permutes coordinates
BigVec star_vector(const GElement& a, const BigVec& b_vec);

// e_1 = a*b, e_{k+1} = a*e_k; exact integers throughout
std::vector<BigVec> e_sequence(const GElement& a, const GElement& b, int k_max);

// L_{a^m}(b) = b + sum_{i=1}^m C(m,i) e_i(a,b)
bool check_binomial_identity(const GElement& a, const GElement& b, int m);

// with n = order of the lambda-part of a:
// n e_k = -sum_{i=2}^n C(n,i) e_{i+k-1} for k <= k_max
bool check_eq2_recursion(const GElement& a, const GElement& b, int k_max);

struct NilCriterionResult {
    bool vanishes = false;
    std::optional<int> first_k;
};
// some e_k(a,b) = 0 with k <= bound; equivalent to e_1 = 0, which is
// asserted as a cross-check (bound <= 0 picks degree * order(perm_a))
NilCriterionResult lemma_nil_criterion(const GElement& a, const GElement& b, int bound = 0);

// order of the permutation group <lambda_x : x in X>
long long socle_index(const Solution& S, long long cap = 1000000);

struct EmbeddingResult {
    FiniteBrace brace;           // vector form, order modulus^m
    int modulus = 0;             // n' = max(socle index, 2)
    std::vector<int> inject;     // x in X -> element index in the brace
    Solution solution_image;     // restriction of the associated solution to inject(X)
};

// Closes the generator images inside (Z/n')^m x Sym(X) and packages the
// result as a finite brace; asserts order n'^m, injectivity on X and that
// the restricted associated solution is isomorphic to S via inject.
EmbeddingResult embed_finite_brace(const Solution& S, long long cap = 1000000);

// (all generator pairs satisfy the vanishing criterion) => S trivial;
// must hold for every valid S
bool check_theorem_one(const Solution& S);

// non-trivial S admits generators x,y with xy != yx; trivial S passes
bool check_nonabelian(const Solution& S);

} // namespace braceforge
