#include "braceforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "braceforge/error.hpp"

namespace braceforge {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw Error("NotABijection", "image array is not a permutation",
                        nlohmann::json{{"images", img_}});
        seen[static_cast<size_t>(v)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::from_cycle(int degree, const std::vector<int>& cycle) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < cycle.size(); ++i)
        img[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
    if (degree() != other.degree())
        throw Error("DegreeMismatch", "permutation degrees differ");
    std::vector<int> img(img_.size());
    for (int x = 0; x < degree(); ++x)
        img[static_cast<size_t>(x)] = img_[static_cast<size_t>(other(x))];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int x = 0; x < degree(); ++x)
        img[static_cast<size_t>(img_[static_cast<size_t>(x)])] = x;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (img_[static_cast<size_t>(x)] != x)
            return false;
    return true;
}

long long Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    long long ord = 1;
    for (int x = 0; x < degree(); ++x) {
        if (seen[static_cast<size_t>(x)])
            continue;
        long long len = 0;
        int y = x;
        while (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            y = img_[static_cast<size_t>(y)];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

size_t PermHash::operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
        h ^= static_cast<size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

PermGroup closure(const std::vector<Perm>& generators, long long cap) {
    if (generators.empty())
        throw Error("DegreeMismatch", "closure needs at least one generator");
    int degree = generators.front().degree();
    for (const Perm& g : generators)
        if (g.degree() != degree)
            throw Error("DegreeMismatch", "generator degrees differ");
    if (cap < 1)
        throw Error("CapExceeded", "cap must be at least 1");

    PermGroup G;
    G.degree = degree;
    G.generators = generators;

    std::unordered_set<Perm, PermHash> seen;
    std::queue<Perm> todo;
    Perm id = Perm::identity(degree);
    seen.insert(id);
    G.elements.push_back(id);
    todo.push(id);
    while (!todo.empty()) {
        Perm cur = todo.front();
        todo.pop();
        for (const Perm& g : generators) {
            Perm next = cur * g;
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw Error("CapExceeded", "group closure exceeded cap",
                                nlohmann::json{{"partial_count", seen.size()}, {"cap", cap}});
                G.elements.push_back(next);
                todo.push(next);
            }
        }
    }
    return G;
}

Perm commutator(const Perm& g, const Perm& h) {
    return g.inverse() * h.inverse() * g * h;
}

bool is_engel_pair(const Perm& g, const Perm& h, long long bound) {
    std::unordered_set<Perm, PermHash> seen;
    Perm c = commutator(g, h);
    for (long long k = 1; k <= bound; ++k) {
        if (c.is_identity())
            return true;
        if (!seen.insert(c).second)
            return false; // cycled without reaching identity
        c = commutator(c, h);
    }
    return c.is_identity();
}

bool is_engel_group(const PermGroup& G) {
    long long bound = G.order();
    for (const Perm& g : G.elements)
        for (const Perm& h : G.elements)
            if (!is_engel_pair(g, h, bound))
                return false;
    return true;
}

NilpotencyResult is_nilpotent(const PermGroup& G, long long cap) {
    // G_1 = G, G_{k+1} = <[a,b] : a in G_k, b in G>
    std::vector<Perm> current = G.elements;
    int cls = 0;
    while (true) {
        if (current.size() == 1)
            return {true, cls};
        std::unordered_set<Perm, PermHash> gens;
        for (const Perm& a : current)
            for (const Perm& b : G.elements) {
                Perm c = commutator(a, b);
                if (!c.is_identity())
                    gens.insert(c);
            }
        std::vector<Perm> next;
        if (gens.empty()) {
            next.push_back(Perm::identity(G.degree));
        } else {
            next = closure(std::vector<Perm>(gens.begin(), gens.end()), cap).elements;
        }
        if (next.size() == current.size())
            return {false, -1}; // stabilized above the identity
        current = std::move(next);
        ++cls;
    }
}

} // namespace braceforge
