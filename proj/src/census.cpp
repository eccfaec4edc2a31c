#include "braceforge/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>

#include "braceforge/brace.hpp"
#include "braceforge/error.hpp"
#include "braceforge/structure_group.hpp"

namespace braceforge {

namespace {

struct Search {
    int m;
    std::vector<std::vector<int>> all_perms; // lex-sorted images of Sym_m
    std::vector<std::vector<int>> rows;      // assigned lambda rows
    std::vector<std::vector<int>> row_inv;   // inverses of assigned rows
    std::vector<Solution>* out;

    std::optional<int> lam(int x, int y) const {
        if (x >= (int)rows.size())
            return std::nullopt;
        return rows[x][y];
    }
    // x^y = lambda^{-1}_{lambda_x(y)}(x), defined when both rows are assigned
    std::optional<int> rho(int x, int y) const {
        auto u = lam(x, y);
        if (!u || *u >= (int)rows.size())
            return std::nullopt;
        return row_inv[*u][x];
    }

    // injectivity of x -> x^y on the pairs already determined
    bool partial_nondegenerate() const {
        for (int y = 0; y < m; ++y) {
            std::vector<bool> seen(m, false);
            for (int x = 0; x < (int)rows.size(); ++x) {
                auto v = rho(x, y);
                if (!v)
                    continue;
                if (seen[*v])
                    return false;
                seen[*v] = true;
            }
        }
        return true;
    }

    using T3 = std::array<int, 3>;
    std::optional<T3> r12(T3 t) const {
        auto l = lam(t[0], t[1]);
        auto r = rho(t[0], t[1]);
        if (!l || !r)
            return std::nullopt;
        return T3{*l, *r, t[2]};
    }
    std::optional<T3> r23(T3 t) const {
        auto l = lam(t[1], t[2]);
        auto r = rho(t[1], t[2]);
        if (!l || !r)
            return std::nullopt;
        return T3{t[0], *l, *r};
    }

    // braid relation on every triple whose full evaluation is already determined
    bool partial_braid() const {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    T3 t{a, b, c};
                    auto l1 = r12(t);
                    auto l2 = l1 ? r23(*l1) : std::optional<T3>();
                    auto l3 = l2 ? r12(*l2) : std::optional<T3>();
                    auto r1 = r23(t);
                    auto r2 = r1 ? r12(*r1) : std::optional<T3>();
                    auto r3 = r2 ? r23(*r2) : std::optional<T3>();
                    if (l3 && r3 && *l3 != *r3)
                        return false;
                }
        return true;
    }

    void rec() {
        if ((int)rows.size() == m) {
            try {
                out->push_back(validate_solution(rows));
            } catch (const Error&) {
                // pruned incompletely; the validator is the gate
            }
            return;
        }
        for (const auto& row : all_perms) {
            rows.push_back(row);
            row_inv.push_back(Perm(row).inverse().images());
            if (partial_nondegenerate() && partial_braid())
                rec();
            rows.pop_back();
            row_inv.pop_back();
        }
    }
};

} // namespace

std::vector<Solution> enumerate_solutions(int m, bool up_to_iso, int max_size) {
    if (m < 1 || m > max_size)
        throw Error("CapExceeded", "enumeration size out of range",
                    nlohmann::json{{"m", m}, {"max_size", max_size}});
    Search s;
    s.m = m;
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    do {
        s.all_perms.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    std::vector<Solution> all;
    s.out = &all;
    s.rec();
    if (!up_to_iso)
        return all;
    std::set<std::vector<std::vector<int>>> canon;
    for (const Solution& sol : all)
        canon.insert(canonical_lambda(sol));
    std::vector<Solution> reps;
    for (const auto& lam : canon)
        reps.push_back(validate_solution(lam));
    return reps;
}

std::vector<CensusRecord> build_census(int m, long long cap) {
    std::vector<CensusRecord> records;
    for (const Solution& sol : enumerate_solutions(m, true)) {
        CensusRecord rec;
        rec.solution = sol;
        rec.mpl = mpl(sol);
        try {
            rec.perm_group_order = socle_index(sol, cap);
            EmbeddingResult emb = embed_finite_brace(sol, cap);
            rec.embedded_brace_order = emb.brace.order();
            rec.right_nilpotent = right_series(emb.brace, cap).nilpotent;
            rec.left_nilpotent = left_series(emb.brace, cap).nilpotent;
            rec.two_sided = is_two_sided(emb.brace).two_sided;
        } catch (const Error& e) {
            if (e.code != "CapExceeded")
                throw;
            rec.error = e.code;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace braceforge
