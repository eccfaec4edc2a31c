#include "braceforge/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "braceforge/error.hpp"

namespace braceforge {

namespace {

using Table = std::vector<std::vector<int>>;

struct Pair {
    int a, b;
};
struct Triple {
    int a, b, c;
};

Triple apply_r12(const Solution& S, Triple t) {
    return {S.lambda[t.a][t.b], S.rho[t.a][t.b], t.c};
}
Triple apply_r23(const Solution& S, Triple t) {
    return {t.a, S.lambda[t.b][t.c], S.rho[t.b][t.c]};
}

} // namespace

bool Solution::is_trivial() const {
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            if (lambda[x][y] != y)
                return false;
    return true;
}

Solution validate_solution(const Table& lambda, const Table* rho_in) {
    int m = static_cast<int>(lambda.size());
    if (m < 1)
        throw Error("SizeMismatch", "empty lambda table");
    for (const auto& row : lambda)
        if (static_cast<int>(row.size()) != m)
            throw Error("SizeMismatch", "lambda table is not square");
    if (rho_in) {
        if (static_cast<int>(rho_in->size()) != m)
            throw Error("SizeMismatch", "rho table size differs from lambda");
        for (const auto& row : *rho_in)
            if (static_cast<int>(row.size()) != m)
                throw Error("SizeMismatch", "rho table is not square");
    }

    // Rows of lambda must be bijections.
    std::vector<Perm> lam, lam_inv;
    lam.reserve(static_cast<size_t>(m));
    for (int x = 0; x < m; ++x) {
        try {
            lam.emplace_back(lambda[static_cast<size_t>(x)]);
        } catch (const Error&) {
            throw Error("NotABijection", "lambda row is not a bijection",
                        nlohmann::json{{"x", x}});
        }
        lam_inv.push_back(lam.back().inverse());
    }

    Solution S;
    S.size = m;
    S.lambda = lambda;
    // rho is derived, never trusted: x^y = lambda^{-1}_{lambda_x(y)}(x).
    S.rho.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            S.rho[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                lam_inv[static_cast<size_t>(lambda[static_cast<size_t>(x)][static_cast<size_t>(y)])](x);

    if (rho_in && *rho_in != S.rho) {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if ((*rho_in)[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
                    S.rho[static_cast<size_t>(x)][static_cast<size_t>(y)])
                    throw Error("NotInvolutive",
                                "supplied rho differs from the table forced by involutivity",
                                nlohmann::json{{"x", x}, {"y", y}});
    }

    // Non-degeneracy of the right action: x -> x^y bijective for each y.
    for (int y = 0; y < m; ++y) {
        std::vector<bool> seen(static_cast<size_t>(m), false);
        for (int x = 0; x < m; ++x) {
            int v = S.rho[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (seen[static_cast<size_t>(v)])
                throw Error("NotABijection", "right action column is not a bijection",
                            nlohmann::json{{"y", y}});
            seen[static_cast<size_t>(v)] = true;
        }
    }

    // Involutivity on all pairs.
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int u = S.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)];
            int v = S.rho[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (S.lambda[static_cast<size_t>(u)][static_cast<size_t>(v)] != x ||
                S.rho[static_cast<size_t>(u)][static_cast<size_t>(v)] != y)
                throw Error("NotInvolutive", "r is not an involution",
                            nlohmann::json{{"x", x}, {"y", y}});
        }

    // Braid relation on all triples.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                Triple t{a, b, c};
                Triple l = apply_r12(S, apply_r23(S, apply_r12(S, t)));
                Triple r = apply_r23(S, apply_r12(S, apply_r23(S, t)));
                if (l.a != r.a || l.b != r.b || l.c != r.c)
                    throw Error("YBEViolation", "braid relation fails",
                                nlohmann::json{{"triple", {a, b, c}}});
            }

    return S;
}

Solution trivial_solution(int m) {
    if (m < 1)
        throw Error("SizeMismatch", "trivial solution needs m >= 1");
    Table lambda(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (auto& row : lambda)
        std::iota(row.begin(), row.end(), 0);
    Solution S;
    S.size = m;
    S.lambda = lambda;
    S.rho.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int x = 0; x < m; ++x)
        std::fill(S.rho[static_cast<size_t>(x)].begin(), S.rho[static_cast<size_t>(x)].end(), x);
    return S;
}

RetractQuotient retract(const Solution& S) {
    int m = S.size;
    RetractQuotient q;
    q.parent_size = m;
    q.class_of.assign(static_cast<size_t>(m), -1);
    std::vector<int> reps; // class index -> representative, first occurrence order
    for (int x = 0; x < m; ++x) {
        for (size_t c = 0; c < reps.size(); ++c)
            if (S.lambda[static_cast<size_t>(x)] == S.lambda[static_cast<size_t>(reps[c])]) {
                q.class_of[static_cast<size_t>(x)] = static_cast<int>(c);
                break;
            }
        if (q.class_of[static_cast<size_t>(x)] < 0) {
            q.class_of[static_cast<size_t>(x)] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
    }
    int k = static_cast<int>(reps.size());
    Table lam(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), -1));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int cx = q.class_of[static_cast<size_t>(x)];
            int cy = q.class_of[static_cast<size_t>(y)];
            int cv = q.class_of[static_cast<size_t>(S.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)])];
            int& slot = lam[static_cast<size_t>(cx)][static_cast<size_t>(cy)];
            if (slot < 0)
                slot = cv;
            else if (slot != cv)
                throw Error("InternalInconsistency",
                            "retracted table not well-defined on classes",
                            nlohmann::json{{"x", x}, {"y", y}});
        }
    q.retracted = validate_solution(lam);
    return q;
}

MplResult mpl(const Solution& S) {
    Solution cur = S;
    int level = 0;
    while (cur.size > 1) {
        Solution next = retract(cur).retracted;
        if (next.size == cur.size)
            return mpl_infinite(); // retraction fixpoint above one point
        cur = std::move(next);
        ++level;
    }
    return mpl_finite(level);
}

namespace {

// Relabeling-invariant signature used to prune the bijection search.
std::pair<std::vector<int>, bool> row_signature(const Solution& S, int x) {
    // cycle type of lambda_x, plus whether x is fixed by its own row
    std::vector<bool> seen(static_cast<size_t>(S.size), false);
    std::vector<int> cycles;
    for (int i = 0; i < S.size; ++i) {
        if (seen[static_cast<size_t>(i)])
            continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = S.lambda[static_cast<size_t>(x)][static_cast<size_t>(j)];
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    return {cycles, S.lambda[static_cast<size_t>(x)][static_cast<size_t>(x)] == x};
}

bool iso_backtrack(const Solution& S1, const Solution& S2, std::vector<int>& phi,
                   std::vector<bool>& used, int depth,
                   const std::vector<std::pair<std::vector<int>, bool>>& sig1,
                   const std::vector<std::pair<std::vector<int>, bool>>& sig2) {
    int m = S1.size;
    if (depth == m)
        return true;
    for (int cand = 0; cand < m; ++cand) {
        if (used[static_cast<size_t>(cand)] || sig1[static_cast<size_t>(depth)] != sig2[static_cast<size_t>(cand)])
            continue;
        phi[static_cast<size_t>(depth)] = cand;
        used[static_cast<size_t>(cand)] = true;
        bool ok = true;
        for (int u = 0; u <= depth && ok; ++u)
            for (int v = 0; v <= depth && ok; ++v) {
                int w = S1.lambda[static_cast<size_t>(u)][static_cast<size_t>(v)];
                if (w <= depth &&
                    phi[static_cast<size_t>(w)] !=
                        S2.lambda[static_cast<size_t>(phi[static_cast<size_t>(u)])]
                                 [static_cast<size_t>(phi[static_cast<size_t>(v)])])
                    ok = false;
            }
        if (ok && iso_backtrack(S1, S2, phi, used, depth + 1, sig1, sig2))
            return true;
        used[static_cast<size_t>(cand)] = false;
        phi[static_cast<size_t>(depth)] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> isomorphism(const Solution& S1, const Solution& S2) {
    if (S1.size != S2.size)
        throw Error("SizeMismatch", "solutions have different sizes",
                    nlohmann::json{{"size1", S1.size}, {"size2", S2.size}});
    int m = S1.size;
    std::vector<std::pair<std::vector<int>, bool>> sig1, sig2;
    for (int x = 0; x < m; ++x) {
        sig1.push_back(row_signature(S1, x));
        sig2.push_back(row_signature(S2, x));
    }
    {
        auto a = sig1;
        auto b = sig2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    std::vector<int> phi(static_cast<size_t>(m), -1);
    std::vector<bool> used(static_cast<size_t>(m), false);
    if (iso_backtrack(S1, S2, phi, used, 0, sig1, sig2)) {
        // full-depth consistency: the partial checks only covered values that
        // were already assigned; verify once at the end
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (phi[static_cast<size_t>(S1.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)])] !=
                    S2.lambda[static_cast<size_t>(phi[static_cast<size_t>(x)])]
                             [static_cast<size_t>(phi[static_cast<size_t>(y)])])
                    throw Error("InternalInconsistency", "isomorphism search returned a bad map");
        return phi;
    }
    return std::nullopt;
}

std::vector<Perm> permutation_generators(const Solution& S) {
    std::vector<Perm> gens;
    gens.reserve(static_cast<size_t>(S.size));
    for (int x = 0; x < S.size; ++x)
        gens.emplace_back(S.lambda[static_cast<size_t>(x)]);
    return gens;
}

Solution subsolution(const Solution& S, const std::vector<int>& subset) {
    std::vector<int> sub = subset;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (sub.empty() || sub.front() < 0 || sub.back() >= S.size)
        throw Error("SizeMismatch", "subset out of range");
    std::vector<int> pos(static_cast<size_t>(S.size), -1);
    for (size_t i = 0; i < sub.size(); ++i)
        pos[static_cast<size_t>(sub[i])] = static_cast<int>(i);
    for (int x : sub)
        for (int y : sub) {
            int l = S.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)];
            int r = S.rho[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (pos[static_cast<size_t>(l)] < 0 || pos[static_cast<size_t>(r)] < 0)
                throw Error("NotInvariant", "subset not closed under the actions",
                            nlohmann::json{{"x", x}, {"y", y}});
        }
    int k = static_cast<int>(sub.size());
    std::vector<std::vector<int>> lam(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lam[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pos[static_cast<size_t>(S.lambda[static_cast<size_t>(sub[static_cast<size_t>(i)])]
                                               [static_cast<size_t>(sub[static_cast<size_t>(j)])])];
    return validate_solution(lam);
}

std::vector<std::vector<int>> canonical_lambda(const Solution& S) {
    int m = S.size;
    std::vector<int> phi(static_cast<size_t>(m));
    std::iota(phi.begin(), phi.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> relab(static_cast<size_t>(m),
                                            std::vector<int>(static_cast<size_t>(m)));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                relab[static_cast<size_t>(phi[static_cast<size_t>(x)])]
                     [static_cast<size_t>(phi[static_cast<size_t>(y)])] =
                    phi[static_cast<size_t>(S.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)])];
        if (best.empty() || relab < best)
            best = std::move(relab);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return best;
}

} // namespace braceforge
