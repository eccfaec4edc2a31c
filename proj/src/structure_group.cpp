#include "braceforge/structure_group.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "braceforge/error.hpp"

namespace braceforge {

namespace {

BigVec permute_vec(const Perm& p, const BigVec& w) {
    BigVec out(w.size());
    for (int i = 0; i < (int)w.size(); ++i)
        out[p(i)] = w[i];
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

bool is_zero(const BigVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

} // namespace

GElement g_identity(int degree) {
    return {BigVec(degree, 0), Perm::identity(degree)};
}

GElement g_multiply(const GElement& a, const GElement& b) {
    if (a.degree() != b.degree())
        throw Error("DegreeMismatch", "structure group elements of different degree");
    BigVec v = a.vec;
    BigVec pw = permute_vec(a.perm, b.vec);
    for (int i = 0; i < a.degree(); ++i)
        v[i] += pw[i];
    return {std::move(v), a.perm * b.perm};
}

GElement g_inverse(const GElement& a) {
    Perm pinv = a.perm.inverse();
    BigVec v = permute_vec(pinv, a.vec);
    for (BigInt& x : v)
        x = -x;
    return {std::move(v), std::move(pinv)};
}

BigVec g_add(const BigVec& a, const BigVec& b) {
    if (a.size() != b.size())
        throw Error("DegreeMismatch", "vector degrees differ");
    BigVec v = a;
    for (size_t i = 0; i < v.size(); ++i)
        v[i] += b[i];
    return v;
}

BigVec g_negate(const BigVec& a) {
    BigVec v = a;
    for (BigInt& x : v)
        x = -x;
    return v;
}

GElement generator(const Solution& S, int x) {
    if (x < 0 || x >= S.size)
        throw Error("IndexOutOfRange", "generator index out of range",
                    nlohmann::json{{"x", x}, {"size", S.size}});
    BigVec v(S.size, 0);
    v[x] = 1;
    return {std::move(v), Perm(S.lambda[x])};
}

BigVec star_vector(const GElement& a, const BigVec& b_vec) {
    if (a.degree() != (int)b_vec.size())
        throw Error("DegreeMismatch", "vector degree differs from element degree");
    BigVec v = permute_vec(a.perm, b_vec);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] -= b_vec[i];
    return v;
}

std::vector<BigVec> e_sequence(const GElement& a, const GElement& b, int k_max) {
    std::vector<BigVec> es;
    es.reserve(k_max);
    BigVec cur = b.vec;
    for (int k = 1; k <= k_max; ++k) {
        cur = star_vector(a, cur);
        es.push_back(cur);
    }
    return es;
}

bool check_binomial_identity(const GElement& a, const GElement& b, int m) {
    auto es = e_sequence(a, b, m);
    BigVec lhs = b.vec;
    for (int i = 0; i < m; ++i)
        lhs = permute_vec(a.perm, lhs);
    BigVec rhs = b.vec;
    for (int i = 1; i <= m; ++i) {
        BigInt c = binomial(m, i);
        for (size_t j = 0; j < rhs.size(); ++j)
            rhs[j] += c * es[i - 1][j];
    }
    return lhs == rhs;
}

bool check_eq2_recursion(const GElement& a, const GElement& b, int k_max) {
    int n = (int)a.perm.order();
    auto es = e_sequence(a, b, k_max + n - 1);
    for (int k = 1; k <= k_max; ++k) {
        BigVec lhs = es[k - 1];
        for (BigInt& x : lhs)
            x *= n;
        BigVec rhs(lhs.size(), 0);
        for (int i = 2; i <= n; ++i) {
            BigInt c = binomial(n, i);
            for (size_t j = 0; j < rhs.size(); ++j)
                rhs[j] -= c * es[i + k - 2][j];
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

NilCriterionResult lemma_nil_criterion(const GElement& a, const GElement& b, int bound) {
    if (bound <= 0)
        bound = a.degree() * (int)a.perm.order();
    auto es = e_sequence(a, b, bound);
    NilCriterionResult res;
    for (int k = 1; k <= bound; ++k)
        if (is_zero(es[k - 1])) {
            res.vanishes = true;
            res.first_k = k;
            break;
        }
    // some e_k vanishes iff e_1 already does (torsion-free additive group)
    if (res.vanishes != is_zero(es[0]))
        throw Error("InternalInconsistency", "vanishing criterion disagrees with e_1");
    return res;
}

long long socle_index(const Solution& S, long long cap) {
    return closure(permutation_generators(S), cap).order();
}

namespace {

// mod-n' coordinate vector paired with its lambda-part
struct ModElement {
    std::vector<int> vec;
    Perm perm;
};

} // namespace

EmbeddingResult embed_finite_brace(const Solution& S, long long cap) {
    int m = S.size;
    long long n = socle_index(S, cap);
    int nprime = (int)std::max<long long>(n, 2);

    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= nprime;
        if (total > cap)
            throw Error("CapExceeded", "embedded brace exceeds cap",
                        nlohmann::json{{"modulus", nprime}, {"dim", m}, {"cap", cap}});
    }

    auto index_of = [&](const std::vector<int>& v) {
        long long idx = 0;
        for (int i = 0; i < m; ++i)
            idx = idx * nprime + v[i];
        return idx;
    };

    std::vector<Perm> gen_perms = permutation_generators(S);
    std::map<long long, Perm> perm_of; // element index -> lambda part
    std::queue<ModElement> todo;

    std::vector<int> zero_vec(m, 0);
    perm_of.emplace(0, Perm::identity(m));
    todo.push({zero_vec, Perm::identity(m)});
    while (!todo.empty()) {
        ModElement cur = todo.front();
        todo.pop();
        for (int x = 0; x < m; ++x) {
            // (v,p)(e_x, lambda_x) = (v + p.e_x, p lambda_x)
            std::vector<int> v = cur.vec;
            v[cur.perm(x)] = (v[cur.perm(x)] + 1) % nprime;
            Perm p = cur.perm * gen_perms[x];
            long long idx = index_of(v);
            auto it = perm_of.find(idx);
            if (it == perm_of.end()) {
                perm_of.emplace(idx, p);
                todo.push({std::move(v), std::move(p)});
            } else if (!(it->second == p)) {
                // the vector must determine the lambda part (I lies in the socle)
                throw Error("InternalInconsistency",
                            "vector projection not injective in embedding");
            }
        }
    }
    if ((long long)perm_of.size() != total)
        throw Error("InternalInconsistency", "embedded brace has wrong order",
                    nlohmann::json{{"expected", total}, {"got", perm_of.size()}});

    std::vector<Perm> coord_perms((size_t)total, Perm());
    for (auto& [idx, p] : perm_of)
        coord_perms[(size_t)idx] = p;

    EmbeddingResult res{FiniteBrace::from_vector_form(nprime, m, std::move(coord_perms)),
                        nprime,
                        {},
                        {}};

    res.inject.resize(m);
    for (int x = 0; x < m; ++x) {
        std::vector<int> e(m, 0);
        e[x] = 1 % nprime;
        res.inject[x] = (int)index_of(e);
    }
    {
        auto sorted = res.inject;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("InternalInconsistency", "injection X -> B not injective");
    }

    // restriction of the associated solution to the image of X
    std::vector<std::vector<int>> lam(m, std::vector<int>(m));
    std::vector<int> pos((size_t)total, -1);
    for (int x = 0; x < m; ++x)
        pos[res.inject[x]] = x;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int v = res.brace.lambda(res.inject[x], res.inject[y]);
            if (pos[v] < 0)
                throw Error("InternalInconsistency", "image of X not invariant in embedding");
            lam[x][y] = pos[v];
        }
    res.solution_image = validate_solution(lam);
    // inject itself must carry S to the restricted solution
    if (res.solution_image.lambda != S.lambda)
        throw Error("InternalInconsistency", "restricted solution differs from input");
    return res;
}

bool check_theorem_one(const Solution& S) {
    bool hypothesis = true;
    for (int x = 0; x < S.size && hypothesis; ++x)
        for (int y = 0; y < S.size && hypothesis; ++y)
            if (!lemma_nil_criterion(generator(S, x), generator(S, y)).vanishes)
                hypothesis = false;
    if (!hypothesis)
        return true; // implication vacuous
    return S.is_trivial();
}

bool check_nonabelian(const Solution& S) {
    if (S.is_trivial())
        return true;
    for (int x = 0; x < S.size; ++x)
        for (int y = 0; y < S.size; ++y) {
            GElement a = generator(S, x), b = generator(S, y);
            if (!(g_multiply(a, b) == g_multiply(b, a)))
                return true;
        }
    return false;
}

} // namespace braceforge
