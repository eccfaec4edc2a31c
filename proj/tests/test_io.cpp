#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braceforge/census.hpp"
#include "braceforge/io.hpp"
#include "braceforge/structure_group.hpp"
#include "fixtures.hpp"

using namespace braceforge;

TEST_CASE("solution json round trip") {
    Solution s = fixtures::sol4();
    Json j = solution_to_json(s);
    CHECK_FALSE(j.contains("rho"));
    CHECK(solution_from_json(j) == s);
    // rho emitted only on request, and accepted back
    Json jr = solution_to_json(s, true);
    CHECK(jr.contains("rho"));
    CHECK(solution_from_json(jr) == s);
    CHECK(solution_to_json(solution_from_json(j)).dump() == j.dump());
}

TEST_CASE("json round trips are stable across the corpus") {
    for (const Solution& s : enumerate_solutions(3, false)) {
        Json j = solution_to_json(s, true);
        CHECK(solution_to_json(solution_from_json(j), true).dump() == j.dump());
    }
}

TEST_CASE("brace json round trip, both forms") {
    FiniteBrace v = fixtures::b4();
    Json jv = brace_to_json(v);
    CHECK(jv.at("repr") == "vector");
    FiniteBrace v2 = brace_from_json(jv);
    CHECK(brace_to_json(v2).dump() == jv.dump());

    FiniteBrace t = FiniteBrace::trivial({2, 2});
    Json jt = brace_to_json(t);
    CHECK(jt.at("repr") == "table");
    CHECK(brace_to_json(brace_from_json(jt)).dump() == jt.dump());
}

TEST_CASE("group json round trip") {
    PermGroup G = closure({Perm::from_cycle(4, {0, 1, 2, 3}), Perm::from_cycle(4, {0, 2})});
    Json j = group_to_json(G);
    PermGroup G2 = group_from_json(j);
    CHECK(G2.order() == G.order());
}

TEST_CASE("ring json round trip") {
    FiniteRing R = FiniteRing::strictly_upper_triangular(3, 3);
    Json j = ring_to_json(R);
    FiniteRing R2 = ring_from_json(j);
    REQUIRE(R2.order() == R.order());
    for (int a = 0; a < R.order(); ++a)
        for (int b = 0; b < R.order(); ++b) {
            CHECK(R2.add(a, b) == R.add(a, b));
            CHECK(R2.mul(a, b) == R.mul(a, b));
        }
    CHECK(ring_to_json(R2).dump() == j.dump());
}

TEST_CASE("embedding json carries modulus and injection") {
    EmbeddingResult e = embed_finite_brace(fixtures::swap2());
    Json j = embedding_to_json(e);
    CHECK(j.at("modulus") == 2);
    CHECK(j.at("inject")[0] == Json::array({1, 0}));
    CHECK(j.at("inject")[1] == Json::array({0, 1}));
    CHECK(brace_from_json(j).order() == 4);
}

TEST_CASE("mpl json") {
    CHECK(mpl_to_json(mpl_finite(2)) == Json(2));
    CHECK(mpl_to_json(mpl_infinite()) == Json("infinite"));
}
