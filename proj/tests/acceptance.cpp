// Acceptance suite: one line per criterion, exit status = number of failures.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/census.hpp"
#include "braceforge/error.hpp"
#include "braceforge/io.hpp"
#include "braceforge/ring.hpp"
#include "braceforge/structure_group.hpp"

using namespace braceforge;

namespace {

constexpr long long kBraceCap = 100000;

struct Corpus {
    std::vector<Solution> solutions;                 // m <= 4, up to isomorphism
    std::vector<std::pair<Solution, FiniteBrace>> braces; // embedded, order <= cap
};

Corpus build_corpus() {
    Corpus c;
    for (int m = 1; m <= 4; ++m)
        for (Solution& s : enumerate_solutions(m, true)) {
            c.solutions.push_back(s);
            try {
                c.braces.emplace_back(s, embed_finite_brace(s, kBraceCap).brace);
            } catch (const Error& e) {
                if (e.code != "CapExceeded")
                    throw;
            }
        }
    return c;
}

bool criterion_prop5(const Corpus& c) {
    for (const auto& [s, B] : c.braces) {
        auto v = check_proposition_five(B);
        if (!v.consistent)
            return false;
        // the associated-solution mpl must also match the series directly
        if (v.mpl.finite != v.right_nilpotency.has_value())
            return false;
    }
    return !c.braces.empty();
}

bool criterion_prop3(const Corpus& c) {
    for (const Solution& s : c.solutions) {
        std::optional<EmbeddingResult> emb;
        try {
            emb = embed_finite_brace(s, kBraceCap);
        } catch (const Error& err) {
            if (err.code == "CapExceeded")
                continue;
            return false;
        }
        const EmbeddingResult& e = *emb;
        long long expected = 1;
        for (int i = 0; i < s.size; ++i)
            expected *= e.modulus;
        if (e.brace.order() != expected)
            return false;
        std::set<int> distinct(e.inject.begin(), e.inject.end());
        if ((int)distinct.size() != s.size)
            return false;
        if (!(e.solution_image == s)) // exact: inject carries S to the restriction
            return false;
    }
    return true;
}

bool criterion_lemma_nil(const Corpus& c) {
    for (const Solution& s : c.solutions)
        for (int x = 0; x < s.size; ++x) {
            GElement a = generator(s, x);
            int bound = s.size * (int)a.perm.order();
            for (int y = 0; y < s.size; ++y) {
                auto r = lemma_nil_criterion(a, generator(s, y), bound);
                bool lambda_fixes = s.lambda[x][y] == y;
                if (r.vanishes != lambda_fixes)
                    return false;
                if (r.vanishes && r.first_k != 1)
                    return false;
            }
        }
    return true;
}

bool criterion_binomial_eq2(const Corpus& c) {
    std::mt19937 rng(987654321);
    long long binomial_cases = 0, eq2_cases = 0;
    while (binomial_cases < 1000 || eq2_cases < 1000) {
        for (const Solution& s : c.solutions) {
            std::uniform_int_distribution<int> gen(0, s.size - 1);
            std::uniform_int_distribution<int> len(1, 5);
            GElement a = g_identity(s.size);
            int L = len(rng);
            for (int i = 0; i < L; ++i)
                a = g_multiply(a, generator(s, gen(rng)));
            GElement b = generator(s, gen(rng));
            for (int m = 1; m <= 6; ++m) {
                if (!check_binomial_identity(a, b, m))
                    return false;
                ++binomial_cases;
            }
            if (a.perm.order() <= 6) {
                if (!check_eq2_recursion(a, b, 4))
                    return false;
                ++eq2_cases;
            }
        }
    }
    return true;
}

bool criterion_theorem_one(const Corpus& c) {
    for (const Solution& s : c.solutions) {
        bool all_vanish = true;
        for (int x = 0; x < s.size && all_vanish; ++x)
            for (int y = 0; y < s.size && all_vanish; ++y)
                all_vanish = lemma_nil_criterion(generator(s, x), generator(s, y)).vanishes;
        if (s.is_trivial() != all_vanish)
            return false; // non-trivial must have a failing witness pair
        if (!check_theorem_one(s))
            return false;
    }
    return true;
}

bool criterion_socle_commutator(const Corpus& c) {
    int checked = 0;
    for (const auto& [s, B] : c.braces)
        if (B.order() <= 256) {
            if (!check_socle_commutator(B))
                return false;
            ++checked;
        }
    return checked > 0;
}

bool criterion_retract_socle(const Corpus& c) {
    int checked = 0;
    for (const auto& [s, B] : c.braces)
        if (B.order() <= 256) {
            if (!retract_iso_check(B))
                return false;
            ++checked;
        }
    return checked > 0;
}

bool criterion_group_ring(const Corpus&) {
    std::vector<PermGroup> groups{
        closure({Perm::from_cycle(2, {0, 1})}),                                  // Z/2
        closure({Perm::from_cycle(4, {0, 1, 2, 3})}),                            // Z/4
        closure({Perm::from_cycle(4, {0, 1}), Perm::from_cycle(4, {2, 3})}),     // Z/2 x Z/2
        closure({Perm::from_cycle(3, {0, 1}), Perm::from_cycle(3, {1, 2})}),     // Sym_3
        closure({Perm::from_cycle(4, {0, 1, 2, 3}), Perm::from_cycle(4, {0, 2})}) // D_4
    };
    for (const PermGroup& G : groups)
        for (int k : {2, 3, 6}) {
            auto emb = embed_group_adjoint(G, k);
            if (!emb.morphism || !emb.injective)
                return false;
            std::set<GroupRing::Elt> image(emb.image.begin(), emb.image.end());
            if ((long long)image.size() != G.order())
                return false;
        }
    return true;
}

bool criterion_radical_roundtrip(const Corpus&) {
    for (auto [s, k] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        FiniteRing R = FiniteRing::strictly_upper_triangular(s, k);
        FiniteBrace B = brace_from_radical_ring(R); // validates + two-sided internally
        if (!validate_brace(B).ok || !is_two_sided(B).two_sided)
            return false;
        FiniteRing back = ring_from_two_sided_brace(B);
        if (back.order() != R.order())
            return false;
        for (int a = 0; a < R.order(); ++a)
            for (int b = 0; b < R.order(); ++b)
                if (back.add(a, b) != R.add(a, b) || back.mul(a, b) != R.mul(a, b))
                    return false;
    }
    return true;
}

std::vector<Solution> naive_enumerate(int m) {
    std::vector<std::vector<int>> perms;
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    do {
        perms.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    std::vector<Solution> out;
    std::vector<int> choice(m, 0);
    while (true) {
        std::vector<std::vector<int>> lam;
        for (int x = 0; x < m; ++x)
            lam.push_back(perms[choice[x]]);
        try {
            out.push_back(validate_solution(lam));
        } catch (const Error&) {
        }
        int i = m - 1;
        while (i >= 0 && choice[i] + 1 == (int)perms.size())
            choice[i--] = 0;
        if (i < 0)
            break;
        ++choice[i];
    }
    return out;
}

bool criterion_census(const Corpus&) {
    for (int m = 1; m <= 3; ++m) {
        auto fast = enumerate_solutions(m, false);
        auto naive = naive_enumerate(m);
        if (fast.size() != naive.size())
            return false;
        for (size_t i = 0; i < fast.size(); ++i)
            if (!(fast[i].lambda == naive[i].lambda))
                return false;
    }
    for (int m = 2; m <= 4; ++m) {
        auto first = enumerate_solutions(m, true);
        auto second = enumerate_solutions(m, true);
        if (first.size() != second.size())
            return false;
        for (size_t i = 0; i < first.size(); ++i)
            if (!(first[i] == second[i]))
                return false;
        std::printf("        census: %zu isomorphism classes on %d points\n", first.size(), m);
    }
    return true;
}

bool criterion_engel_nilpotent(const Corpus& c) {
    int checked = 0;
    for (const Solution& s : c.solutions) {
        PermGroup G = closure(permutation_generators(s));
        if (G.order() > 200)
            continue;
        if (is_engel_group(G) != is_nilpotent(G).nilpotent)
            return false;
        ++checked;
    }
    return checked > 0;
}

bool criterion_nonabelian(const Corpus& c) {
    for (const Solution& s : c.solutions)
        if (!check_nonabelian(s))
            return false;
    return true;
}

} // namespace

int main() {
    Corpus corpus = build_corpus();
    std::printf("corpus: %zu solutions (m<=4 up to iso), %zu embedded braces (order<=%lld)\n",
                corpus.solutions.size(), corpus.braces.size(), kBraceCap);

    struct Criterion {
        const char* name;
        std::function<bool(const Corpus&)> run;
    };
    std::vector<Criterion> criteria{
        {"proposition-five: mpl equals right-nilpotency index on the brace corpus", criterion_prop5},
        {"proposition-three: embedding order n'^m, injective, restriction isomorphic", criterion_prop3},
        {"lemma-nil: e_k vanishes iff e_1 does iff lambda_x fixes y", criterion_lemma_nil},
        {"binomial identity and order recursion on >=1000 random words", criterion_binomial_eq2},
        {"theorem-one corollary: vanishing hypothesis iff trivial", criterion_theorem_one},
        {"socle-commutator identity on braces of order <= 256", criterion_socle_commutator},
        {"retraction/socle coherence on braces of order <= 256", criterion_retract_socle},
        {"group-ring adjoint embedding g -> g-1 for five groups, k in {2,3,6}", criterion_group_ring},
        {"radical-ring roundtrip on strictly upper triangular rings", criterion_radical_roundtrip},
        {"census determinism and all-tables oracle agreement", criterion_census},
        {"engel <=> nilpotent for permutation groups of the census", criterion_engel_nilpotent},
        {"non-abelian witness for every non-trivial solution", criterion_nonabelian},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        std::string note;
        try {
            ok = criteria[i].run(corpus);
        } catch (const Error& e) {
            note = std::string(" (") + e.code + ": " + e.what() + ")";
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        std::printf("[%s] %2zu. %s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    note.c_str());
        if (!ok)
            ++failures;
    }
    return failures;
}
