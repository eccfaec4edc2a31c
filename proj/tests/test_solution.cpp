#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/error.hpp"
#include "braceforge/solution.hpp"
#include "fixtures.hpp"

using namespace braceforge;

TEST_CASE("trivial solutions validate") {
    Solution s1 = trivial_solution(1);
    CHECK(s1.size == 1);
    CHECK(s1.lambda == std::vector<std::vector<int>>{{0}});

    Solution s3 = trivial_solution(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(s3.lambda[x][y] == y);
            CHECK(s3.rho[x][y] == x);
        }
    CHECK_NOTHROW(validate_solution(trivial_solution(4).lambda));
}

TEST_CASE("swap2 validates and derives rho") {
    Solution s = fixtures::swap2();
    // r(x,y) = (y+1, x+1) mod 2
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(s.lambda[x][y] == (y + 1) % 2);
            CHECK(s.rho[x][y] == (x + 1) % 2);
        }
}

TEST_CASE("invalid lambda tables are rejected with a witness") {
    // lambda_0 = id, lambda_1 = (0 1) is not a solution
    CHECK_THROWS_AS(validate_solution({{0, 1}, {1, 0}}), Error);
    try {
        validate_solution({{0, 1}, {1, 0}});
    } catch (const Error& e) {
        CHECK((e.code == "NotInvolutive" || e.code == "YBEViolation" ||
               e.code == "NotABijection"));
        CHECK_FALSE(e.witness.is_null());
    }
    // degenerate row
    CHECK_THROWS_AS(validate_solution({{0, 0}, {0, 1}}), Error);
    // mismatching caller-supplied rho
    auto lam = fixtures::swap2().lambda;
    std::vector<std::vector<int>> bad_rho{{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_solution(lam, &bad_rho), Error);
}

TEST_CASE("retract collapses equal-lambda classes") {
    auto q = retract(trivial_solution(3));
    CHECK(q.retracted.size == 1);

    q = retract(fixtures::swap2());
    CHECK(q.retracted.size == 1);
    CHECK(q.class_of == std::vector<int>{0, 0});

    q = retract(fixtures::sol4());
    CHECK(q.retracted.size == 2);
    CHECK(q.class_of[0] == q.class_of[3]);
    CHECK(q.class_of[1] == q.class_of[2]);
    CHECK(q.class_of[0] != q.class_of[1]);
    CHECK(q.retracted.is_trivial());
}

TEST_CASE("mpl") {
    CHECK(mpl(trivial_solution(1)) == mpl_finite(0));
    CHECK(mpl(trivial_solution(2)) == mpl_finite(1));
    CHECK(mpl(fixtures::swap2()) == mpl_finite(1));
    CHECK(mpl(fixtures::sol4()) == mpl_finite(2));
}

TEST_CASE("mpl = 1 + mpl of retraction while finite") {
    for (const Solution& s : {fixtures::swap2(), fixtures::sol4(), trivial_solution(4)}) {
        MplResult full = mpl(s);
        if (s.size > 1 && full.finite)
            CHECK(full.level == 1 + mpl(retract(s).retracted).level);
    }
}

TEST_CASE("isomorphism testing") {
    Solution s = fixtures::swap2();
    auto phi = isomorphism(s, s);
    REQUIRE(phi.has_value());
    CHECK(*phi == std::vector<int>{0, 1});

    CHECK_FALSE(is_isomorphic(trivial_solution(2), fixtures::swap2()));

    // relabeling by (0 1) gives the same table here, still isomorphic
    Solution relabeled = validate_solution({{1, 0}, {1, 0}});
    CHECK(is_isomorphic(s, relabeled));

    CHECK_THROWS_AS(isomorphism(trivial_solution(2), trivial_solution(3)), Error);
}

TEST_CASE("isomorphic solutions share invariants") {
    Solution a = fixtures::sol4();
    // relabel by the 4-cycle (0 1 2 3)
    std::vector<int> phi{1, 2, 3, 0};
    std::vector<std::vector<int>> lam(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            lam[phi[x]][phi[y]] = phi[a.lambda[x][y]];
    Solution b = validate_solution(lam);
    CHECK(is_isomorphic(a, b));
    CHECK(mpl(a) == mpl(b));
}

TEST_CASE("permutation generators read off the lambda rows") {
    auto gens = permutation_generators(trivial_solution(3));
    for (const Perm& g : gens)
        CHECK(g.is_identity());

    gens = permutation_generators(fixtures::swap2());
    CHECK(gens[0] == Perm({1, 0}));
    CHECK(gens[1] == Perm({1, 0}));

    gens = permutation_generators(fixtures::sol4());
    CHECK(gens[0].is_identity());
    CHECK(gens[1] == Perm({0, 2, 1, 3}));
    CHECK(gens[2] == gens[1]);
    CHECK(gens[3].is_identity());
}

TEST_CASE("subsolution") {
    Solution s = fixtures::sol4();
    Solution whole = subsolution(s, {0, 1, 2, 3});
    CHECK(whole == s);

    // {1,2} is closed: lambda swaps 1 and 2, rho likewise
    Solution sub = subsolution(s, {1, 2});
    CHECK(is_isomorphic(sub, fixtures::swap2()));

    CHECK_THROWS_AS(subsolution(s, {0, 1}), Error);
    try {
        subsolution(s, {0, 1});
    } catch (const Error& e) {
        CHECK(e.code == "NotInvariant");
    }
}

TEST_CASE("rho formula holds on every valid fixture") {
    for (const Solution& s : {trivial_solution(4), fixtures::swap2(), fixtures::sol4()}) {
        auto gens = permutation_generators(s);
        for (int x = 0; x < s.size; ++x)
            for (int y = 0; y < s.size; ++y)
                CHECK(s.rho[x][y] == gens[s.lambda[x][y]].inverse()(x));
    }
}
