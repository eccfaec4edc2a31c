#include "braceforge/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "braceforge/error.hpp"

namespace braceforge {

FiniteBrace FiniteBrace::from_tables(std::vector<std::vector<int>> add,
                                     std::vector<std::vector<int>> lam, int zero) {
    int n = (int)add.size();
    if (n < 1 || (int)lam.size() != n || zero < 0 || zero >= n)
        throw Error("SizeMismatch", "bad table dimensions");
    for (const auto& row : add)
        if ((int)row.size() != n)
            throw Error("SizeMismatch", "add table not square");
    for (const auto& row : lam)
        if ((int)row.size() != n)
            throw Error("SizeMismatch", "lambda table not square");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add[a][b] < 0 || add[a][b] >= n || lam[a][b] < 0 || lam[a][b] >= n)
                throw Error("SizeMismatch", "table entry out of range");

    FiniteBrace B;
    B.repr_ = Repr::Table;
    B.order_ = n;
    B.zero_ = zero;
    B.add_ = std::move(add);
    B.lam_ = std::move(lam);
    // negatives and multiplicative inverses by lookup; -1 when absent
    // (validate_brace reports the violation)
    B.neg_.assign(n, -1);
    B.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (B.add_[a][b] == zero)
                B.neg_[a] = b;
            if (B.add_[a][B.lam_[a][b]] == zero)
                B.inv_[a] = b;
        }
    return B;
}

FiniteBrace FiniteBrace::from_vector_form(int modulus, int dim, std::vector<Perm> coord_perms) {
    if (modulus < 1 || dim < 1)
        throw Error("SizeMismatch", "modulus and dim must be positive");
    long long n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= modulus;
        if (n > (1LL << 30))
            throw Error("CapExceeded", "vector brace too large");
    }
    if ((long long)coord_perms.size() != n)
        throw Error("SizeMismatch", "need one coordinate permutation per element");
    for (const Perm& p : coord_perms)
        if (p.degree() != dim)
            throw Error("DegreeMismatch", "coordinate permutation of wrong degree");
    FiniteBrace B;
    B.repr_ = Repr::Vector;
    B.order_ = (int)n;
    B.zero_ = 0;
    B.modulus_ = modulus;
    B.dim_ = dim;
    B.coord_perms_ = std::move(coord_perms);
    return B;
}

FiniteBrace FiniteBrace::trivial(const std::vector<int>& cyclic_factors) {
    long long n = 1;
    for (int f : cyclic_factors) {
        if (f < 1)
            throw Error("SizeMismatch", "cyclic factor must be positive");
        n *= f;
        if (n > 100000)
            throw Error("CapExceeded", "trivial brace too large for table form");
    }
    int N = (int)n;
    auto decode = [&](int idx) {
        std::vector<int> v(cyclic_factors.size());
        for (int i = (int)cyclic_factors.size() - 1; i >= 0; --i) {
            v[i] = idx % cyclic_factors[i];
            idx /= cyclic_factors[i];
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (size_t i = 0; i < v.size(); ++i)
            idx = idx * cyclic_factors[i] + v[i];
        return idx;
    };
    std::vector<std::vector<int>> add(N, std::vector<int>(N)), lam(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) {
        auto va = decode(a);
        for (int b = 0; b < N; ++b) {
            auto vb = decode(b);
            std::vector<int> vs(va.size());
            for (size_t i = 0; i < va.size(); ++i)
                vs[i] = (va[i] + vb[i]) % cyclic_factors[i];
            add[a][b] = encode(vs);
            lam[a][b] = b;
        }
    }
    return from_tables(std::move(add), std::move(lam), 0);
}

std::vector<int> FiniteBrace::element_vector(int a) const {
    std::vector<int> v(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
        v[i] = a % modulus_;
        a /= modulus_;
    }
    return v;
}

int FiniteBrace::index_of_vector(const std::vector<int>& v) const {
    int idx = 0;
    for (int i = 0; i < dim_; ++i)
        idx = idx * modulus_ + ((v[i] % modulus_) + modulus_) % modulus_;
    return idx;
}

int FiniteBrace::add(int a, int b) const {
    if (repr_ == Repr::Table)
        return add_[a][b];
    std::vector<int> va = element_vector(a), vb = element_vector(b);
    for (int i = 0; i < dim_; ++i)
        va[i] = (va[i] + vb[i]) % modulus_;
    return index_of_vector(va);
}

int FiniteBrace::neg(int a) const {
    if (repr_ == Repr::Table) {
        if (neg_[a] < 0)
            throw Error("AxiomViolation", "element has no additive inverse",
                        nlohmann::json{{"element", a}});
        return neg_[a];
    }
    std::vector<int> v = element_vector(a);
    for (int i = 0; i < dim_; ++i)
        v[i] = (modulus_ - v[i]) % modulus_;
    return index_of_vector(v);
}

int FiniteBrace::lambda(int a, int b) const {
    if (repr_ == Repr::Table)
        return lam_[a][b];
    const Perm& p = coord_perms_[a];
    std::vector<int> vb = element_vector(b), out(dim_);
    for (int i = 0; i < dim_; ++i)
        out[p(i)] = vb[i];
    return index_of_vector(out);
}

int FiniteBrace::inv(int a) const {
    if (repr_ == Repr::Table) {
        if (inv_[a] < 0)
            throw Error("AxiomViolation", "element has no multiplicative inverse",
                        nlohmann::json{{"element", a}});
        return inv_[a];
    }
    // (v, p)^-1 = (-p^-1 . v, p^-1)
    const Perm pinv = coord_perms_[a].inverse();
    std::vector<int> v = element_vector(a), out(dim_);
    for (int i = 0; i < dim_; ++i)
        out[pinv(i)] = v[i];
    for (int i = 0; i < dim_; ++i)
        out[i] = (modulus_ - out[i]) % modulus_;
    return index_of_vector(out);
}

bool FiniteBrace::lambda_is_identity(int a) const {
    if (repr_ == Repr::Vector)
        return coord_perms_[a].is_identity();
    for (int b = 0; b < order_; ++b)
        if (lam_[a][b] != b)
            return false;
    return true;
}

std::vector<int> FiniteBrace::lambda_signature(int a) const {
    if (repr_ == Repr::Vector)
        return coord_perms_[a].images();
    return lam_[a];
}

BraceValidationReport validate_brace(const FiniteBrace& B) {
    int n = B.order();
    auto fail = [](std::string what, std::vector<int> w) {
        return BraceValidationReport{false, std::move(what), std::move(w)};
    };
    int z = B.zero();
    // abelian group (B,+)
    for (int a = 0; a < n; ++a) {
        if (B.add(z, a) != a || B.add(a, z) != a)
            return fail("additive neutral", {a});
        bool has_neg = false;
        for (int b = 0; b < n && !has_neg; ++b)
            has_neg = B.add(a, b) == z;
        if (!has_neg)
            return fail("additive inverse", {a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (B.add(a, b) != B.add(b, a))
                return fail("additive commutativity", {a, b});
            for (int c = 0; c < n; ++c)
                if (B.add(B.add(a, b), c) != B.add(a, B.add(b, c)))
                    return fail("additive associativity", {a, b, c});
        }
    // each lambda_a an additive automorphism, lambda a homomorphism of (B,.)
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (int b = 0; b < n; ++b) {
            int v = B.lambda(a, b);
            if (seen[v])
                return fail("lambda row not bijective", {a});
            seen[v] = true;
        }
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (B.lambda(a, B.add(b, c)) != B.add(B.lambda(a, b), B.lambda(a, c)))
                    return fail("lambda not additive", {a, b, c});
    }
    // group (B,.) with neutral zero
    for (int a = 0; a < n; ++a) {
        if (B.mul(z, a) != a || B.mul(a, z) != a)
            return fail("multiplicative neutral", {a});
        bool has_inv = false;
        for (int b = 0; b < n && !has_inv; ++b)
            has_inv = B.mul(a, b) == z && B.mul(b, a) == z;
        if (!has_inv)
            return fail("multiplicative inverse", {a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (B.mul(B.mul(a, b), c) != B.mul(a, B.mul(b, c)))
                    return fail("multiplicative associativity", {a, b, c});
                // a.(b+c)+a = a.b+a.c
                if (B.add(B.mul(a, B.add(b, c)), a) != B.add(B.mul(a, b), B.mul(a, c)))
                    return fail("left brace law", {a, b, c});
                if (B.lambda(B.mul(a, b), c) != B.lambda(a, B.lambda(b, c)))
                    return fail("lambda not multiplicative", {a, b, c});
            }
    return {};
}

Subset socle(const FiniteBrace& B) {
    Subset s;
    for (int a = 0; a < B.order(); ++a)
        if (B.lambda_is_identity(a))
            s.push_back(a);
    if (B.order() <= 4096 && !is_ideal(B, s))
        throw Error("InternalInconsistency", "socle is not an ideal");
    return s;
}

bool is_ideal(const FiniteBrace& B, const Subset& S) {
    std::vector<bool> in(B.order(), false);
    for (int s : S) {
        if (s < 0 || s >= B.order())
            return false;
        in[s] = true;
    }
    if (!in[B.zero()])
        return false;
    for (int s : S)
        for (int t : S)
            if (!in[B.add(s, t)] || !in[B.mul(s, t)])
                return false;
    for (int a = 0; a < B.order(); ++a)
        for (int s : S)
            if (!in[B.mul(B.mul(a, s), B.inv(a))] || !in[B.lambda(a, s)])
                return false;
    return true;
}

QuotientResult quotient(const FiniteBrace& B, const Subset& I) {
    if (!is_ideal(B, I))
        throw Error("NotAnIdeal", "quotient requires an ideal");
    int n = B.order();
    std::vector<int> proj(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (proj[a] >= 0)
            continue;
        int c = (int)reps.size();
        reps.push_back(a);
        for (int i : I)
            proj[B.add(a, i)] = c;
    }
    int k = (int)reps.size();
    std::vector<std::vector<int>> add(k, std::vector<int>(k)), lam(k, std::vector<int>(k));
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            add[c][d] = proj[B.add(reps[c], reps[d])];
            lam[c][d] = proj[B.lambda(reps[c], reps[d])];
        }
    // cross-check the induced tables against every pair of coset members
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (proj[B.add(a, b)] != add[proj[a]][proj[b]] ||
                proj[B.lambda(a, b)] != lam[proj[a]][proj[b]])
                throw Error("InternalInconsistency", "quotient tables not well-defined",
                            nlohmann::json{{"a", a}, {"b", b}});
        }
    QuotientResult q{FiniteBrace::from_tables(std::move(add), std::move(lam), proj[B.zero()]),
                     std::move(proj)};
    auto report = validate_brace(q.brace);
    if (!report.ok)
        throw Error("InternalInconsistency", "quotient brace fails validation: " + report.failure);
    return q;
}

namespace {

// representatives of the distinct lambda maps occurring in S
std::vector<int> lambda_class_reps(const FiniteBrace& B, const Subset& S) {
    std::map<std::vector<int>, int> seen;
    std::vector<int> reps;
    for (int s : S)
        if (seen.emplace(B.lambda_signature(s), s).second)
            reps.push_back(s);
    return reps;
}

Subset additive_closure(const FiniteBrace& B, const std::vector<int>& gens) {
    std::vector<bool> in(B.order(), false);
    Subset out;
    std::queue<int> todo;
    in[B.zero()] = true;
    out.push_back(B.zero());
    todo.push(B.zero());
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        for (int g : gens) {
            int y = B.add(x, g);
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
                todo.push(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Subset star_span(const FiniteBrace& B, const Subset& S, const Subset& T) {
    // star(s,t) depends on s only through lambda_s
    std::vector<int> reps = lambda_class_reps(B, S);
    std::unordered_set<int> gens;
    for (int s : reps)
        for (int t : T) {
            int v = B.star(s, t);
            if (v != B.zero())
                gens.insert(v);
        }
    return additive_closure(B, std::vector<int>(gens.begin(), gens.end()));
}

namespace {

SeriesResult series_impl(const FiniteBrace& B, bool right, long long cap) {
    if ((long long)B.order() > cap)
        throw Error("CapExceeded", "brace order exceeds cap",
                    nlohmann::json{{"order", B.order()}, {"cap", cap}});
    Subset all(B.order());
    std::iota(all.begin(), all.end(), 0);
    SeriesResult res;
    res.terms.push_back(all);
    while (true) {
        const Subset& cur = res.terms.back();
        if (cur.size() == 1 && cur[0] == B.zero()) {
            res.nilpotent = true;
            return res;
        }
        Subset next = right ? star_span(B, cur, all) : star_span(B, all, cur);
        if (next == cur)
            return res; // stabilized above zero
        res.terms.push_back(std::move(next));
    }
}

} // namespace

SeriesResult right_series(const FiniteBrace& B, long long cap) {
    return series_impl(B, true, cap);
}

SeriesResult left_series(const FiniteBrace& B, long long cap) {
    return series_impl(B, false, cap);
}

Solution associated_solution(const FiniteBrace& B) {
    int n = B.order();
    std::vector<std::vector<int>> lam(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            lam[a][b] = B.lambda(a, b);
    return validate_solution(lam);
}

MplResult mpl_of_associated(const FiniteBrace& B) {
    int n = B.order();
    if (n == 1)
        return mpl_finite(0);
    // first retraction: classes of equal lambda maps
    std::map<std::vector<int>, int> class_id;
    std::vector<int> class_of(n), reps;
    for (int a = 0; a < n; ++a) {
        auto sig = B.lambda_signature(a);
        auto it = class_id.find(sig);
        if (it == class_id.end()) {
            it = class_id.emplace(std::move(sig), (int)reps.size()).first;
            reps.push_back(a);
        }
        class_of[a] = it->second;
    }
    int k = (int)reps.size();
    if (k == n)
        return mpl_infinite(); // no collapse, fixpoint above one point
    std::vector<std::vector<int>> lam(k, std::vector<int>(k, -1));
    for (int c = 0; c < k; ++c)
        for (int b = 0; b < n; ++b) {
            int v = class_of[B.lambda(reps[c], b)];
            int& slot = lam[c][class_of[b]];
            if (slot < 0)
                slot = v;
            else if (slot != v)
                throw Error("InternalInconsistency", "retraction not well-defined on classes");
        }
    MplResult rest = mpl(validate_solution(lam));
    if (!rest.finite)
        return rest;
    return mpl_finite(rest.level + 1);
}

TwoSidedResult is_two_sided(const FiniteBrace& B) {
    int n = B.order();
    if (B.repr() == FiniteBrace::Repr::Vector) {
        // (a+b).c+c = a.c+b.c is linear in c, so as coordinate matrices it
        // reads P_{a+b} + I = P_a + P_b over Z/modulus; additivity of
        // v -> P_v - I needs checking only against basis vectors a = e_i.
        int d = B.dim(), mod = B.modulus();
        auto violated = [&](int a, int b) {
            const Perm &pa = B.coord_perm(a), &pb = B.coord_perm(b),
                       &pab = B.coord_perm(B.add(a, b));
            for (int i = 0; i < d; ++i) {
                std::vector<int> col(d, 0);
                col[pab(i)] += 1;
                col[i] += 1;
                col[pa(i)] += mod - 1;
                col[pb(i)] += mod - 1;
                for (int j = 0; j < d; ++j)
                    if (col[j] % mod != 0)
                        return true;
            }
            return false;
        };
        for (int i = 0; i < d; ++i) {
            std::vector<int> e(d, 0);
            e[i] = 1 % mod;
            int a = B.index_of_vector(e);
            for (int b = 0; b < n; ++b)
                if (violated(a, b)) {
                    for (int c = 0; c < n; ++c)
                        if (B.add(B.mul(B.add(a, b), c), c) != B.add(B.mul(a, c), B.mul(b, c)))
                            return {false, {a, b, c}};
                    throw Error("InternalInconsistency", "matrix test disagrees with triple scan");
                }
        }
        return {};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (B.add(B.mul(B.add(a, b), c), c) != B.add(B.mul(a, c), B.mul(b, c)))
                    return {false, {a, b, c}};
    return {};
}

bool check_socle_commutator(const FiniteBrace& B) {
    Subset soc = socle(B);
    for (int a = 0; a < B.order(); ++a) {
        int ai = B.inv(a);
        for (int c : soc) {
            // [c,a] = c^-1 a^-1 c a in (B,.)
            int comm = B.mul(B.mul(B.mul(B.inv(c), ai), c), a);
            if (comm != B.star(ai, c))
                return false;
        }
    }
    return true;
}

PropositionFiveVerdict check_proposition_five(const FiniteBrace& B, long long cap) {
    PropositionFiveVerdict v;
    v.mpl = mpl_of_associated(B);
    SeriesResult rs = right_series(B, cap);
    if (rs.nilpotent)
        v.right_nilpotency = (int)rs.terms.size() - 1;
    v.consistent = (v.mpl.finite == v.right_nilpotency.has_value()) &&
                   (!v.mpl.finite || v.mpl.level == *v.right_nilpotency);
    return v;
}

bool retract_iso_check(const FiniteBrace& B) {
    Solution lhs = retract(associated_solution(B)).retracted;
    Solution rhs = associated_solution(quotient(B, socle(B)).brace);
    if (lhs.size != rhs.size)
        return false;
    return is_isomorphic(lhs, rhs);
}

} // namespace braceforge
