#include "braceforge/ring.hpp"

#include <algorithm>

#include "braceforge/error.hpp"

namespace braceforge {

std::vector<int> FiniteRing::element_vector(int a) const {
    std::vector<int> v(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
        v[i] = a % k_;
        a /= k_;
    }
    return v;
}

int FiniteRing::index_of_vector(const std::vector<int>& v) const {
    int idx = 0;
    for (int i = 0; i < dim_; ++i)
        idx = idx * k_ + ((v[i] % k_) + k_) % k_;
    return idx;
}

FiniteRing FiniteRing::from_structure_constants(int k, int dim,
                                                std::vector<std::vector<std::vector<int>>> sc,
                                                bool unital, std::optional<std::vector<int>> one) {
    if (k < 2 || dim < 1)
        throw Error("SizeMismatch", "need k >= 2 and dim >= 1");
    long long n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= k;
        if (n > 100000)
            throw Error("CapExceeded", "ring too large for table form");
    }
    FiniteRing R;
    R.order_ = (int)n;
    R.k_ = k;
    R.dim_ = dim;
    R.sc_ = sc;
    int N = R.order_;
    R.add_.assign(N, std::vector<int>(N));
    R.mul_.assign(N, std::vector<int>(N));
    R.neg_.assign(N, 0);
    for (int a = 0; a < N; ++a) {
        auto va = R.element_vector(a);
        std::vector<int> nv(dim);
        for (int i = 0; i < dim; ++i)
            nv[i] = (k - va[i]) % k;
        R.neg_[a] = R.index_of_vector(nv);
        for (int b = 0; b < N; ++b) {
            auto vb = R.element_vector(b);
            std::vector<int> sum(dim), prod(dim, 0);
            for (int i = 0; i < dim; ++i)
                sum[i] = (va[i] + vb[i]) % k;
            for (int i = 0; i < dim; ++i) {
                if (va[i] == 0)
                    continue;
                for (int j = 0; j < dim; ++j) {
                    if (vb[j] == 0)
                        continue;
                    for (int t = 0; t < dim; ++t)
                        prod[t] = (prod[t] + va[i] * vb[j] * sc[i][j][t]) % k;
                }
            }
            R.add_[a][b] = R.index_of_vector(sum);
            R.mul_[a][b] = R.index_of_vector(prod);
        }
    }
    if (unital) {
        if (!one)
            throw Error("SizeMismatch", "unital ring needs a one vector");
        R.one_ = R.index_of_vector(*one);
    }
    return R;
}

FiniteRing FiniteRing::from_tables(std::vector<std::vector<int>> add,
                                   std::vector<std::vector<int>> mul, int zero,
                                   std::optional<int> one) {
    int n = (int)add.size();
    if (n < 1 || (int)mul.size() != n || zero < 0 || zero >= n)
        throw Error("SizeMismatch", "bad ring tables");
    FiniteRing R;
    R.order_ = n;
    R.zero_ = zero;
    R.add_ = std::move(add);
    R.mul_ = std::move(mul);
    R.one_ = one;
    R.neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (R.add_[a][b] == zero)
                R.neg_[a] = b;
    for (int a = 0; a < n; ++a)
        if (R.neg_[a] < 0)
            throw Error("AxiomViolation", "element without additive inverse",
                        nlohmann::json{{"element", a}});
    return R;
}

FiniteRing FiniteRing::strictly_upper_triangular(int s, int k) {
    // basis: matrix units E_{pq}, p < q, ordered lexicographically
    std::vector<std::pair<int, int>> basis;
    for (int p = 0; p < s; ++p)
        for (int q = p + 1; q < s; ++q)
            basis.emplace_back(p, q);
    int dim = (int)basis.size();
    std::vector<std::vector<std::vector<int>>> sc(
        dim, std::vector<std::vector<int>>(dim, std::vector<int>(dim, 0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // E_{pq} E_{uv} = delta_{qu} E_{pv}
            auto [p, q] = basis[i];
            auto [u, v] = basis[j];
            if (q == u)
                for (int t = 0; t < dim; ++t)
                    if (basis[t] == std::make_pair(p, v))
                        sc[i][j][t] = 1;
        }
    return from_structure_constants(k, dim, std::move(sc));
}

FiniteRing FiniteRing::zero_ring(int k, int dim) {
    std::vector<std::vector<std::vector<int>>> sc(
        dim, std::vector<std::vector<int>>(dim, std::vector<int>(dim, 0)));
    return from_structure_constants(k, dim, std::move(sc));
}

int FiniteRing::one() const {
    if (!one_)
        throw Error("SizeMismatch", "ring is not unital");
    return *one_;
}

void FiniteRing::validate() const {
    int n = order_;
    for (int a = 0; a < n; ++a) {
        if (add_[zero_][a] != a)
            throw Error("AxiomViolation", "additive neutral fails", nlohmann::json{{"a", a}});
        for (int b = 0; b < n; ++b) {
            if (add_[a][b] != add_[b][a])
                throw Error("AxiomViolation", "addition not commutative",
                            nlohmann::json{{"a", a}, {"b", b}});
            for (int c = 0; c < n; ++c) {
                if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
                    throw Error("AxiomViolation", "addition not associative",
                                nlohmann::json{{"triple", {a, b, c}}});
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw Error("AxiomViolation", "multiplication not associative",
                                nlohmann::json{{"triple", {a, b, c}}});
                if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
                    throw Error("AxiomViolation", "left distributivity fails",
                                nlohmann::json{{"triple", {a, b, c}}});
                if (mul_[add_[a][b]][c] != add_[mul_[a][c]][mul_[b][c]])
                    throw Error("AxiomViolation", "right distributivity fails",
                                nlohmann::json{{"triple", {a, b, c}}});
            }
        }
    }
    if (one_) {
        for (int a = 0; a < n; ++a)
            if (mul_[*one_][a] != a || mul_[a][*one_] != a)
                throw Error("AxiomViolation", "one is not neutral", nlohmann::json{{"a", a}});
    }
}

bool is_jacobson_radical(const FiniteRing& R) {
    int n = R.order(), z = R.zero();
    for (int a = 0; a < n; ++a) {
        bool ok = false;
        for (int b = 0; b < n && !ok; ++b)
            ok = R.adjoint(a, b) == z && R.adjoint(b, a) == z;
        if (!ok)
            return false;
    }
    return true;
}

FiniteBrace brace_from_radical_ring(const FiniteRing& R) {
    if (!is_jacobson_radical(R))
        throw Error("NotRadical", "ring is not Jacobson radical");
    int n = R.order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), lam(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = R.add(a, b);
            lam[a][b] = R.add(b, R.mul(a, b)); // lambda_a(b) = b + ab
        }
    FiniteBrace B = FiniteBrace::from_tables(std::move(add), std::move(lam), R.zero());
    auto report = validate_brace(B);
    if (!report.ok)
        throw Error("InternalInconsistency",
                    "radical ring did not give a valid brace: " + report.failure);
    if (!is_two_sided(B).two_sided)
        throw Error("InternalInconsistency", "radical ring gave a one-sided brace");
    return B;
}

FiniteRing ring_from_two_sided_brace(const FiniteBrace& B) {
    auto ts = is_two_sided(B);
    if (!ts.two_sided)
        throw Error("NotTwoSided", "brace is not two-sided",
                    nlohmann::json{{"witness", ts.witness}});
    int n = B.order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = B.add(a, b);
            mul[a][b] = B.star(a, b);
        }
    FiniteRing R = FiniteRing::from_tables(std::move(add), std::move(mul), B.zero());
    R.validate();
    if (!is_jacobson_radical(R))
        throw Error("InternalInconsistency", "two-sided brace gave a non-radical ring");
    return R;
}

GroupRing::GroupRing(int k, PermGroup G) : k_(k), group_(std::move(G)) {
    if (k_ < 2)
        throw Error("SizeMismatch", "coefficient modulus must be >= 2");
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < (int)group_.elements.size(); ++i) {
        index[group_.elements[i].images()] = i;
        if (group_.elements[i].is_identity())
            id_index_ = i;
    }
    int n = (int)group_.elements.size();
    prod_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            prod_[i][j] = index.at((group_.elements[i] * group_.elements[j]).images());
}

int GroupRing::index_of(const Perm& p) const {
    for (int i = 0; i < (int)group_.elements.size(); ++i)
        if (group_.elements[i] == p)
            return i;
    throw Error("IndexOutOfRange", "permutation not in group");
}

GroupRing::Elt GroupRing::one() const {
    return {{id_index_, 1 % k_}};
}

GroupRing::Elt GroupRing::basis(int g_index, int coeff) const {
    coeff = ((coeff % k_) + k_) % k_;
    if (coeff == 0)
        return {};
    return {{g_index, coeff}};
}

GroupRing::Elt GroupRing::add(const Elt& a, const Elt& b) const {
    Elt out = a;
    for (auto [g, c] : b) {
        int v = (out.count(g) ? out[g] : 0) + c;
        v %= k_;
        if (v == 0)
            out.erase(g);
        else
            out[g] = v;
    }
    return out;
}

GroupRing::Elt GroupRing::neg(const Elt& a) const {
    Elt out;
    for (auto [g, c] : a)
        out[g] = (k_ - c) % k_;
    return out;
}

GroupRing::Elt GroupRing::mul(const Elt& a, const Elt& b) const {
    Elt out;
    for (auto [g, cg] : a)
        for (auto [h, ch] : b) {
            int gh = prod_[g][h];
            int v = ((out.count(gh) ? out[gh] : 0) + cg * ch) % k_;
            if (v == 0)
                out.erase(gh);
            else
                out[gh] = v;
        }
    return out;
}

GroupRing::Elt GroupRing::adjoint(const Elt& a, const Elt& b) const {
    return add(add(a, b), mul(a, b));
}

GroupAdjointEmbedding embed_group_adjoint(const PermGroup& G, int k) {
    GroupRing R(k, G);
    GroupAdjointEmbedding res;
    int n = (int)G.elements.size();
    for (int i = 0; i < n; ++i) {
        // f(g) = g - 1
        GroupRing::Elt f = R.add(R.basis(i), R.neg(R.one()));
        res.image.push_back(f);
    }
    res.morphism = true;
    for (int i = 0; i < n && res.morphism; ++i)
        for (int j = 0; j < n && res.morphism; ++j)
            if (R.adjoint(res.image[i], res.image[j]) != res.image[R.product_index(i, j)])
                res.morphism = false;
    std::vector<GroupRing::Elt> sorted = res.image;
    std::sort(sorted.begin(), sorted.end());
    res.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return res;
}

} // namespace braceforge
