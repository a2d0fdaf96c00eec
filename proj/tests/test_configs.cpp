#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscat/configs.hpp"

#include <map>

using namespace grasscat;

namespace {

// star with the given top multiplicities all mapping into one bottom vertex
SubspacePoset star(std::vector<int> tops, int bottom) {
    SubspacePoset S;
    S.mult = tops;
    S.mult.push_back(bottom);
    for (int i = 0; i < static_cast<int>(tops.size()); ++i)
        S.edges.emplace_back(i, static_cast<int>(tops.size()));
    return S;
}

std::multiset<int> degree_sequence(const SubspacePoset& S) {
    std::map<int, int> deg;
    for (const auto& [a, b] : S.edges) {
        deg[a]++;
        deg[b]++;
    }
    std::multiset<int> out;
    for (int v = 0; v < S.vertex_count(); ++v) out.insert(deg[v]);
    return out;
}

} // namespace

TEST_CASE("poset of 169|147|358 matches the worked diagram") {
    const auto S = poset_from_profile(profile_from_string("169|147|358", 9));
    std::multiset<int> mults(S.mult.begin(), S.mult.end());
    CHECK(mults == std::multiset<int>{1, 1, 2, 2, 2, 3});
    CHECK(S.edges.size() == 7);
    // two 1-vertices of degree 2; 2-vertices of degrees 3, 2, 2; bottom degree 3
    CHECK(degree_sequence(S) == std::multiset<int>{2, 2, 2, 2, 3, 3});
    const auto T = simplify(S);
    std::multiset<int> tm(T.mult.begin(), T.mult.end());
    CHECK(tm == std::multiset<int>{2, 2, 2, 3});
    CHECK(T.edges.size() == 3);
    CHECK(generic_indecomposable(T) == Indec::No); // (2,2,2;3) is not a D4 root
}

TEST_CASE("simplify removes forced intersections only") {
    // 1 -> {2, 2} -> 3: the 1 is the generic intersection (2+2-3 = 1)
    SubspacePoset S;
    S.mult = {1, 2, 2, 3};
    S.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    const auto T = simplify(S);
    CHECK(T.vertex_count() == 3);
    // a 1 with a single out-neighbor stays
    SubspacePoset keep;
    keep.mult = {1, 2, 3};
    keep.edges = {{0, 1}, {1, 2}};
    CHECK(simplify(keep).vertex_count() == 3);
}

TEST_CASE("generic indecomposable on small shapes") {
    SubspacePoset single;
    single.mult = {1};
    CHECK(generic_indecomposable(single) == Indec::Yes);
    SubspacePoset big;
    big.mult = {2};
    CHECK(generic_indecomposable(big) == Indec::No);
    SubspacePoset a3;
    a3.mult = {1, 2, 1};
    a3.edges = {{0, 1}, {2, 1}};
    CHECK(generic_indecomposable(a3) == Indec::No); // (1,2,1) is not an A3 root
    SubspacePoset a3root;
    a3root.mult = {1, 1, 1};
    a3root.edges = {{0, 1}, {2, 1}};
    CHECK(generic_indecomposable(a3root) == Indec::Yes);
    SubspacePoset disconnected;
    disconnected.mult = {1, 1};
    CHECK(generic_indecomposable(disconnected) == Indec::No);
}

TEST_CASE("catalog: one quasi-box above, up to three below") {
    // shapes (a)-(j); only (g) admits an indecomposable configuration
    std::vector<SubspacePoset> shapes;
    {
        SubspacePoset s; // (a) 1 - 3
        s.mult = {1, 3};
        s.edges = {{0, 1}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (b) 1 - 2 - 3
        s.mult = {1, 2, 3};
        s.edges = {{0, 1}, {1, 2}};
        shapes.push_back(s);
    }
    shapes.push_back(star({1, 2}, 3));        // (c)
    {
        SubspacePoset s; // (d) 1 into two 2s, both into 3
        s.mult = {1, 2, 2, 3};
        s.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (e) 1 - 2a - 3, 2b - 3
        s.mult = {1, 2, 2, 3};
        s.edges = {{0, 1}, {1, 3}, {2, 3}};
        shapes.push_back(s);
    }
    shapes.push_back(star({1, 2, 2}, 3));     // (f)
    shapes.push_back(star({1, 2, 2, 2}, 3));  // (g)
    {
        SubspacePoset s; // (h) pendant 1 on one arm of the 2,2,2 star
        s.mult = {1, 2, 2, 2, 3};
        s.edges = {{0, 1}, {1, 4}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (i) 1 into two of the three 2s
        s.mult = {1, 2, 2, 2, 3};
        s.edges = {{0, 1}, {0, 2}, {1, 4}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (j) 1 into all three 2s
        s.mult = {1, 2, 2, 2, 3};
        s.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    for (size_t i = 0; i < shapes.size(); ++i) {
        const auto T = simplify(shapes[i]);
        const auto v = generic_indecomposable(T);
        const bool indec = v == Indec::Yes || (v == Indec::Unknown && root_exists(T));
        CHECK(indec == (i == 6)); // only (g)
    }
}

TEST_CASE("catalog: two quasi-boxes above, up to two below") {
    // shapes (a)-(k); only (k) admits an indecomposable configuration
    std::vector<SubspacePoset> shapes;
    shapes.push_back(star({1, 1}, 3)); // (a)
    {
        SubspacePoset s; // (b) two 1s into a 2, into 3
        s.mult = {1, 1, 2, 3};
        s.edges = {{0, 2}, {1, 2}, {2, 3}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (c) 1 - 2 - 3 and 1' - 3
        s.mult = {1, 2, 1, 3};
        s.edges = {{0, 1}, {1, 3}, {2, 3}};
        shapes.push_back(s);
    }
    shapes.push_back(star({1, 1, 2}, 3)); // (d)
    {
        SubspacePoset s; // (e) 1 - 2a; 2a, 1', 2b into 3
        s.mult = {1, 2, 1, 2, 3};
        s.edges = {{0, 1}, {1, 4}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (f) 1 into both 2s; 2s into 3; 1' into 3
        s.mult = {1, 2, 2, 1, 3};
        s.edges = {{0, 1}, {0, 2}, {1, 4}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (g) two chains 1 - 2 - 3
        s.mult = {1, 1, 2, 2, 3};
        s.edges = {{0, 2}, {1, 3}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (h) 1 into both 2s, 1' into one
        s.mult = {1, 1, 2, 2, 3};
        s.edges = {{0, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (i) both 1s into both 2s
        s.mult = {1, 1, 2, 2, 3};
        s.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    {
        SubspacePoset s; // (j) both 1s into 2a; 2a, 2b into 3
        s.mult = {1, 1, 2, 2, 3};
        s.edges = {{0, 2}, {1, 2}, {2, 4}, {3, 4}};
        shapes.push_back(s);
    }
    shapes.push_back(star({1, 1, 2, 2}, 3)); // (k)
    for (size_t i = 0; i < shapes.size(); ++i) {
        const auto T = simplify(shapes[i]);
        const auto v = generic_indecomposable(T);
        const bool indec = v == Indec::Yes || (v == Indec::Unknown && root_exists(T));
        CHECK(indec == (i == 10)); // only (k)
    }
}

TEST_CASE("star configurations need at least four arms") {
    // I = J forces a star of 2s into the 3
    for (int arms = 0; arms <= 5; ++arms) {
        const auto S = star(std::vector<int>(arms, 2), 3);
        const auto v = generic_indecomposable(simplify(S));
        const bool indec = v == Indec::Yes || (v == Indec::Unknown && root_exists(S));
        CHECK(indec == (arms >= 4));
    }
}

TEST_CASE("dot export") {
    const auto S = poset_from_profile(profile_from_string("147|258", 9));
    const auto dot = to_dot(S);
    CHECK(dot.find("graph poset") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK_THROWS_AS(poset_from_profile(profile_from_string("147", 9)), domain_error);
}
