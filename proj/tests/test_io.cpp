#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscat/io.hpp"

using namespace grasscat;

TEST_CASE("ksubset and profile json round trips") {
    const KSubset I(9, {1, 5, 6});
    const auto j = to_json(I);
    CHECK(j["n"] == 9);
    CHECK(j["k"] == 3);
    CHECK(ksubset_from_json(j) == I);
    const auto P = profile_from_string("359|258|147|146", 9);
    CHECK(profile_from_json(to_json(P)) == P);
    CHECK(to_json(P)["rows"].size() == 4);
}

TEST_CASE("module json round trip preserves the module up to equality") {
    const TruncatedRing R(32003, default_truncation(9));
    const auto M = build_from_profile(R, profile_from_string("147|258", 9), 5);
    const auto M2 = module_from_json(to_json(M));
    CHECK(M2.n == M.n);
    CHECK(M2.k == M.k);
    CHECK(M2.s == M.s);
    CHECK(content_vector(M2) == content_vector(M));
    CHECK(are_isomorphic(M, M2, 20, 1));
}

TEST_CASE("root data json") {
    const auto d = profile_root(profile_from_string("157|369|248", 9));
    const auto j = to_json(d);
    CHECK(j["type"] == "imaginary");
    CHECK(j["q"] == 0);
}

TEST_CASE("tube dot rendering") {
    TubeRow row;
    row.entries = {profile_from_string("124", 9), profile_from_string("356", 9)};
    row.period = 2;
    const auto dot = tube_to_dot(row);
    CHECK(dot.find("digraph tube") != std::string::npos);
    CHECK(dot.find("m1 -> m0") != std::string::npos);
}
