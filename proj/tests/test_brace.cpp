#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braceforge/census.hpp"
#include "braceforge/error.hpp"
#include "braceforge/structure_group.hpp"
#include "fixtures.hpp"

using namespace braceforge;

namespace {

// re-express any brace through explicit tables (cross-check for the
// vector-form fast paths)
FiniteBrace to_table_form(const FiniteBrace& B) {
    int n = B.order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), lam(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = B.add(a, b);
            lam[a][b] = B.lambda(a, b);
        }
    return FiniteBrace::from_tables(std::move(add), std::move(lam), B.zero());
}

} // namespace

TEST_CASE("trivial braces validate and multiply like they add") {
    FiniteBrace z4 = FiniteBrace::trivial({4});
    CHECK(z4.order() == 4);
    CHECK(validate_brace(z4).ok);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(z4.mul(a, b) == z4.add(a, b));

    FiniteBrace v = FiniteBrace::trivial({2, 2});
    CHECK(v.order() == 4);
    CHECK(validate_brace(v).ok);
}

TEST_CASE("b4 validates; a corrupted lambda entry is caught") {
    FiniteBrace b4 = fixtures::b4();
    CHECK(validate_brace(b4).ok);

    FiniteBrace table = to_table_form(b4);
    CHECK(validate_brace(table).ok);

    int n = table.order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), lam(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = table.add(a, b);
            lam[a][b] = table.lambda(a, b);
        }
    std::swap(lam[1][0], lam[1][1]); // break one row
    auto report = validate_brace(FiniteBrace::from_tables(add, lam, 0));
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.failure.empty());
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("star operation on b4") {
    FiniteBrace b4 = fixtures::b4();
    // indices: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
    CHECK(b4.star(2, 2) == 3); // (1,0)*(1,0) = (1,1)
    for (int x = 0; x < 4; ++x)
        CHECK(b4.star(3, x) == 0); // lambda_(1,1) = id
    FiniteBrace z4 = FiniteBrace::trivial({4});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(z4.star(a, b) == 0);
}

TEST_CASE("star equals a.b - a - b") {
    FiniteBrace b4 = fixtures::b4();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(b4.star(a, b) == b4.sub(b4.sub(b4.mul(a, b), a), b));
}

TEST_CASE("star is left distributive over +") {
    for (const FiniteBrace& B : {fixtures::b4(), FiniteBrace::trivial({2, 3})})
        for (int a = 0; a < B.order(); ++a)
            for (int b = 0; b < B.order(); ++b)
                for (int c = 0; c < B.order(); ++c)
                    CHECK(B.star(a, B.add(b, c)) == B.add(B.star(a, b), B.star(a, c)));
}

TEST_CASE("socle") {
    FiniteBrace b4 = fixtures::b4();
    CHECK(socle(b4) == Subset{0, 3});
    FiniteBrace z6 = FiniteBrace::trivial({6});
    CHECK(socle(z6).size() == 6);
    EmbeddingResult e = embed_finite_brace(trivial_solution(2));
    CHECK((int)socle(e.brace).size() == e.brace.order());
}

TEST_CASE("ideals") {
    FiniteBrace b4 = fixtures::b4();
    Subset all{0, 1, 2, 3};
    CHECK(is_ideal(b4, {0}));
    CHECK(is_ideal(b4, all));
    CHECK(is_ideal(b4, socle(b4)));
    CHECK_FALSE(is_ideal(b4, {0, 2})); // not lambda-invariant
}

TEST_CASE("quotients") {
    FiniteBrace b4 = fixtures::b4();
    CHECK(quotient(b4, {0, 1, 2, 3}).brace.order() == 1);
    auto q = quotient(b4, socle(b4));
    CHECK(q.brace.order() == 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(q.brace.lambda(a, b) == b); // trivial brace of order 2
    CHECK(quotient(b4, {0}).brace.order() == 4);
    CHECK_THROWS_AS(quotient(b4, {0, 2}), Error);
}

TEST_CASE("star span") {
    FiniteBrace b4 = fixtures::b4();
    Subset all{0, 1, 2, 3};
    CHECK(star_span(b4, all, all) == Subset{0, 3});
    CHECK(star_span(b4, {0}, all) == Subset{0});
    CHECK(star_span(b4, all, {0}) == Subset{0});
    FiniteBrace z4 = FiniteBrace::trivial({4});
    CHECK(star_span(z4, {0, 1, 2, 3}, {0, 1, 2, 3}) == Subset{0});
}

TEST_CASE("right and left series of b4") {
    FiniteBrace b4 = fixtures::b4();
    auto rs = right_series(b4);
    REQUIRE(rs.terms.size() == 3);
    CHECK(rs.terms[1] == Subset{0, 3});
    CHECK(rs.terms[2] == Subset{0});
    CHECK(rs.nilpotent);
    auto ls = left_series(b4);
    CHECK(ls.terms == rs.terms);
    CHECK(ls.nilpotent);
}

TEST_CASE("series terms are descending lambda-invariant additive subgroups") {
    for (int m = 2; m <= 3; ++m)
        for (const Solution& S : enumerate_solutions(m, true)) {
            FiniteBrace B = embed_finite_brace(S).brace;
            for (auto series : {right_series(B), left_series(B)})
                for (size_t i = 0; i + 1 < series.terms.size(); ++i) {
                    const Subset& big = series.terms[i];
                    const Subset& small = series.terms[i + 1];
                    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
                    for (int a = 0; a < B.order(); ++a)
                        for (int s : small)
                            CHECK(std::binary_search(small.begin(), small.end(), B.lambda(a, s)));
                }
        }
}

TEST_CASE("associated solution") {
    CHECK(associated_solution(FiniteBrace::trivial({5})) == trivial_solution(5));
    CHECK(associated_solution(fixtures::b4()) == fixtures::sol4());
}

TEST_CASE("mpl of associated solution, implicit vs materialized") {
    for (const FiniteBrace& B : {fixtures::b4(), FiniteBrace::trivial({2, 2}),
                                 embed_finite_brace(fixtures::sol4()).brace}) {
        MplResult implicit_path = mpl_of_associated(B);
        MplResult direct = mpl(associated_solution(B));
        CHECK(implicit_path == direct);
    }
    CHECK(mpl_of_associated(fixtures::b4()) == mpl_finite(2));
}

TEST_CASE("two-sidedness: vector fast path agrees with the triple scan") {
    for (int m = 2; m <= 3; ++m)
        for (const Solution& S : enumerate_solutions(m, true)) {
            FiniteBrace B = embed_finite_brace(S).brace;
            auto fast = is_two_sided(B);
            auto slow = is_two_sided(to_table_form(B));
            CHECK(fast.two_sided == slow.two_sided);
        }
    CHECK(is_two_sided(fixtures::b4()).two_sided);
    CHECK(is_two_sided(FiniteBrace::trivial({2, 3})).two_sided);
}

TEST_CASE("socle commutator identity") {
    CHECK(check_socle_commutator(fixtures::b4()));
    CHECK(check_socle_commutator(FiniteBrace::trivial({4})));
}

TEST_CASE("proposition five on fixtures") {
    auto v = check_proposition_five(fixtures::b4());
    CHECK(v.mpl == mpl_finite(2));
    CHECK(v.right_nilpotency == 2);
    CHECK(v.consistent);

    v = check_proposition_five(FiniteBrace::trivial({2}));
    CHECK(v.mpl == mpl_finite(1));
    CHECK(v.right_nilpotency == 1);
    CHECK(v.consistent);
}

TEST_CASE("retract of the associated solution matches the socle quotient") {
    CHECK(retract_iso_check(fixtures::b4()));
    CHECK(retract_iso_check(FiniteBrace::trivial({2, 2})));
}

TEST_CASE("iterating socle quotients reaches a fixpoint") {
    FiniteBrace B = fixtures::b4();
    for (int guard = 0; guard < 10; ++guard) {
        Subset s = socle(B);
        if ((int)s.size() == B.order())
            break;
        B = quotient(B, s).brace;
    }
    CHECK((int)socle(B).size() == B.order());
}
