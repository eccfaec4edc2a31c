#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace braceforge {

// Permutation of {0..n-1}. Composition convention throughout the project:
// (f*g)(x) = f(g(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);
    // Cycle given as a list of points, remaining points fixed.
    static Perm from_cycle(int degree, const std::vector<int>& cycle);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& other) const; // (f*g)(x) = f(g(x))
    Perm inverse() const;
    bool is_identity() const;
    long long order() const; // lcm of cycle lengths

    bool operator==(const Perm& other) const { return img_ == other.img_; }
    bool operator<(const Perm& other) const { return img_ < other.img_; }

private:
    std::vector<int> img_;
};

struct PermHash {
    size_t operator()(const Perm& p) const;
};

struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements; // full enumerated closure, identity first
    long long order() const { return static_cast<long long>(elements.size()); }
};

// Breadth-first product closure of the generators. Throws CapExceeded if the
// element count passes `cap`.
PermGroup closure(const std::vector<Perm>& generators, long long cap = 1000000);

// [g,h] = g^-1 h^-1 g h
Perm commutator(const Perm& g, const Perm& h);

// Iterated commutator [[..[g,h],h]..,h] reaches identity within `bound` steps.
// Exact: the orbit is finite, a repeat before identity proves false.
bool is_engel_pair(const Perm& g, const Perm& h, long long bound);

bool is_engel_group(const PermGroup& G);

struct NilpotencyResult {
    bool nilpotent = false;
    int nilpotency_class = -1; // valid when nilpotent
};

// Lower central series by generated commutator subgroups until stabilization.
NilpotencyResult is_nilpotent(const PermGroup& G, long long cap = 1000000);

} // namespace braceforge
