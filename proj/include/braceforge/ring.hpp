#pragma once

#include <map>
#include <optional>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/perm.hpp"

namespace braceforge {

// Finite (possibly non-unital) ring on element indices. Backed by Cayley
// tables; rings built from structure constants over (Z/k)^d keep k, dim and
// the constants around for serialization.
class FiniteRing {
public:
    // sc[i][j] = coefficient vector of e_i * e_j
    static FiniteRing from_structure_constants(int k, int dim,
                                               std::vector<std::vector<std::vector<int>>> sc,
                                               bool unital = false,
                                               std::optional<std::vector<int>> one = std::nullopt);
    static FiniteRing from_tables(std::vector<std::vector<int>> add,
                                  std::vector<std::vector<int>> mul, int zero,
                                  std::optional<int> one = std::nullopt);
    // strictly upper triangular s x s matrices over Z/k
    static FiniteRing strictly_upper_triangular(int s, int k);
    static FiniteRing zero_ring(int k, int dim);

    int order() const { return order_; }
    int zero() const { return zero_; }
    bool unital() const { return one_.has_value(); }
    int one() const;

    int add(int a, int b) const { return add_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int adjoint(int a, int b) const { return add(add(a, b), mul(a, b)); } // a+b+ab

    // structure-constant metadata (0/empty for table-built rings)
    int coeff_modulus() const { return k_; }
    int dim() const { return dim_; }
    const std::vector<std::vector<std::vector<int>>>& structure_constants() const { return sc_; }
    std::vector<int> element_vector(int a) const;
    int index_of_vector(const std::vector<int>& v) const;

    // associativity and both distributive laws on all triples
    void validate() const;

private:
    FiniteRing() = default;
    int order_ = 0, zero_ = 0;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
    std::optional<int> one_;
    int k_ = 0, dim_ = 0;
    std::vector<std::vector<std::vector<int>>> sc_;
};

// every element quasi-regular: for each a some b with a o b = b o a = 0
bool is_jacobson_radical(const FiniteRing& R);

// (R,+,o) as a two-sided brace: lambda_a(b) = b + ab
FiniteBrace brace_from_radical_ring(const FiniteRing& R);

// (B,+,*) as a Jacobson radical ring
FiniteRing ring_from_two_sided_brace(const FiniteBrace& B);

// Group ring (Z/k)[G] for an enumerated permutation group; elements are
// sparse coefficient maps so large groups never get materialized.
class GroupRing {
public:
    using Elt = std::map<int, int>; // group element index -> nonzero coeff mod k

    GroupRing(int k, PermGroup G);

    int coeff_modulus() const { return k_; }
    const PermGroup& group() const { return group_; }
    int identity_index() const { return id_index_; }

    Elt zero() const { return {}; }
    Elt one() const;                    // identity-supported coefficient 1
    Elt basis(int g_index, int coeff = 1) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const; // convolution
    Elt adjoint(const Elt& a, const Elt& b) const;

    int index_of(const Perm& p) const;
    int product_index(int i, int j) const { return prod_[i][j]; }

private:
    int k_;
    PermGroup group_;
    std::vector<std::vector<int>> prod_;
    int id_index_ = 0;
};

struct GroupAdjointEmbedding {
    std::vector<GroupRing::Elt> image; // f(g) = g - 1, aligned with group elements
    bool morphism = false;             // f(gh) = f(g) o f(h) on all pairs
    bool injective = false;
};

GroupAdjointEmbedding embed_group_adjoint(const PermGroup& G, int k);

} // namespace braceforge
