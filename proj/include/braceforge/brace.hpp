#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braceforge/perm.hpp"
#include "braceforge/solution.hpp"

namespace braceforge {

// Finite left brace on element indices {0..order-1}.
//
// Two storage forms behind one interface:
//  - Table: explicit Cayley tables for + and an explicit lambda table
//    (lam[a][b] = lambda_a(b)); desk scale, order <= a few hundred.
//  - Vector: elements are vectors in (Z/modulus)^dim in lexicographic order
//    (first coordinate most significant); addition is coordinatewise and
//    lambda_a permutes coordinates by a per-element Perm of degree dim.
//    This is the form produced by the finite-brace embedding and scales to
//    orders ~10^5.
class FiniteBrace {
public:
    enum class Repr { Table, Vector };

    static FiniteBrace from_tables(std::vector<std::vector<int>> add,
                                   std::vector<std::vector<int>> lam, int zero);
    static FiniteBrace from_vector_form(int modulus, int dim, std::vector<Perm> coord_perms);
    // lambda_a = id for all a over the product of the given cyclic groups
    static FiniteBrace trivial(const std::vector<int>& cyclic_factors);

    Repr repr() const { return repr_; }
    int order() const { return order_; }
    int zero() const { return zero_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int lambda(int a, int b) const;
    int mul(int a, int b) const { return add(a, lambda(a, b)); } // a.b = a + lambda_a(b)
    int inv(int a) const;
    int star(int a, int b) const { return sub(lambda(a, b), b); } // a*b = a.b - a - b

    bool lambda_is_identity(int a) const;
    // identifies lambda_a as a function; equal signatures <=> equal lambda maps
    std::vector<int> lambda_signature(int a) const;

    // vector-form accessors
    int modulus() const { return modulus_; }
    int dim() const { return dim_; }
    const Perm& coord_perm(int a) const { return coord_perms_[a]; }
    std::vector<int> element_vector(int a) const;
    int index_of_vector(const std::vector<int>& v) const;

private:
    FiniteBrace() = default;

    Repr repr_ = Repr::Table;
    int order_ = 0;
    int zero_ = 0;
    // table form
    std::vector<std::vector<int>> add_, lam_;
    std::vector<int> neg_, inv_;
    // vector form
    int modulus_ = 0, dim_ = 0;
    std::vector<Perm> coord_perms_;
};

struct BraceValidationReport {
    bool ok = true;
    std::string failure;        // which axiom, when !ok
    std::vector<int> witness;   // offending elements
};

// All four axioms exhaustively: abelian +, group ., the left-brace law
// a.(b+c)+a = a.b+a.c, and lambda a homomorphism into additive automorphisms.
// O(N^2)..O(N^3); meant for table-scale braces.
BraceValidationReport validate_brace(const FiniteBrace& B);

// Sorted element-index subsets.
using Subset = std::vector<int>;

Subset socle(const FiniteBrace& B); // {a : lambda_a = id}, always an ideal

bool is_ideal(const FiniteBrace& B, const Subset& S);

struct QuotientResult {
    FiniteBrace brace;
    std::vector<int> projection; // parent index -> coset index
};
QuotientResult quotient(const FiniteBrace& B, const Subset& I);

// Additive subgroup generated by {s*t : s in S, t in T}.
Subset star_span(const FiniteBrace& B, const Subset& S, const Subset& T);

struct SeriesResult {
    std::vector<Subset> terms;  // B^(1), B^(2), ... until 0 or stabilization
    bool nilpotent = false;     // reached {0}
};
// Right chain B^(1)=B, B^(n+1)=B^(n)*B.
SeriesResult right_series(const FiniteBrace& B, long long cap = 1000000);
// Left chain B^1=B, B^{n+1}=B*B^n.
SeriesResult left_series(const FiniteBrace& B, long long cap = 1000000);

// r(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a)) on all of B.
// Materializes an order x order table; table scale only.
Solution associated_solution(const FiniteBrace& B);

// Multipermutation level of the associated solution without materializing it:
// the first retraction groups elements by lambda_signature, after which sizes
// are small. Agrees with mpl(associated_solution(B)) by construction.
MplResult mpl_of_associated(const FiniteBrace& B);

struct TwoSidedResult {
    bool two_sided = true;
    std::vector<int> witness; // failing triple when !two_sided
};
TwoSidedResult is_two_sided(const FiniteBrace& B);

// [c,a] = a^{-1}*c for all a in B, c in soc(B); an identity in every brace.
bool check_socle_commutator(const FiniteBrace& B);

struct PropositionFiveVerdict {
    MplResult mpl;
    std::optional<int> right_nilpotency; // min m with B^(m+1)=0
    bool consistent = false;             // mpl finite <=> index exists, and equal
};
PropositionFiveVerdict check_proposition_five(const FiniteBrace& B, long long cap = 1000000);

// Ret(solution of B) isomorphic to solution of B/soc(B).
bool retract_iso_check(const FiniteBrace& B);

} // namespace braceforge
