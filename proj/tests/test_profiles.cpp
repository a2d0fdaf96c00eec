#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscat/profiles.hpp"
#include "grasscat/ring.hpp"

#include <numeric>
#include <set>

using namespace grasscat;

namespace {
KSubset ks(int n, std::vector<int> e) { return KSubset(n, std::move(e)); }

std::set<int> zero_positions(const std::vector<int>& d) {
    std::set<int> out;
    for (size_t j = 1; j < d.size(); ++j)
        if (d[j] == 0) out.insert(static_cast<int>(j));
    return out;
}

KSubset random_subset(SplitMix64& rng, int k, int n) {
    std::set<int> e;
    while (static_cast<int>(e.size()) < k) e.insert(1 + static_cast<int>(rng.next() % n));
    return KSubset(n, std::vector<int>(e.begin(), e.end()));
}
} // namespace

TEST_CASE("rim difference branching points") {
    const auto I = ks(16, {4, 5, 8, 10, 13, 14, 16});
    const auto J = ks(16, {1, 2, 6, 7, 11, 13, 15});
    CHECK(zero_positions(rim_difference(I, J)) == std::set<int>{5, 10, 14, 16});
    const auto d = rim_difference(ks(9, {1, 4, 7}), ks(9, {1, 4, 7}));
    CHECK(std::all_of(d.begin(), d.end(), [](int v) { return v == 0; }));
    const auto d2 = rim_difference(ks(9, {1, 4, 7}), ks(9, {2, 5, 8}));
    CHECK(zero_positions(d2) == std::set<int>{1, 4, 7});
    for (int j = 1; j <= 9; ++j)
        CHECK(d2[j] == ((j == 1 || j == 4 || j == 7) ? 0 : 1));
}

TEST_CASE("quasi-boxes of the 7-subset pair") {
    const auto I = ks(16, {4, 5, 8, 10, 13, 14, 16});
    const auto J = ks(16, {1, 2, 6, 7, 11, 13, 15});
    const auto boxes = quasi_boxes(I, J);
    REQUIRE(boxes.size() == 4);
    int box_count = 0;
    for (const auto& b : boxes) {
        box_count += b.is_box;
        if (b.arc_start == 5) {
            CHECK(b.arc_end == 10);
            CHECK(b.size == 2);
            CHECK(b.cosize == 3);
            CHECK(!b.is_box);
        }
        if (b.arc_start == 10) {
            CHECK(b.size == 2);
            CHECK(b.cosize == 2);
            CHECK(!b.is_box);
        }
    }
    CHECK(box_count == 2);
}

TEST_CASE("quasi-boxes of 3-interlacing and disjoint pairs") {
    const auto boxes = quasi_boxes(ks(9, {1, 4, 7}), ks(9, {2, 5, 8}));
    REQUIRE(boxes.size() == 3);
    for (const auto& b : boxes) {
        CHECK(b.size == 1);
        CHECK(b.cosize == 2);
        CHECK(b.is_box);
    }
    CHECK(quasi_boxes(ks(9, {1, 2, 3}), ks(9, {4, 5, 6})).size() == 1);
    CHECK(quasi_boxes(ks(9, {1, 4, 7}), ks(9, {1, 4, 7})).empty());
}

TEST_CASE("collapse") {
    const auto [a, b] =
        collapse(ks(16, {4, 5, 8, 10, 13, 14, 16}), ks(16, {1, 2, 6, 7, 11, 13, 15}));
    CHECK(a == ks(12, {3, 4, 7, 8, 10, 12}));
    CHECK(b == ks(12, {1, 2, 5, 6, 9, 11}));
    const auto [c, d] = collapse(ks(9, {1, 4, 7}), ks(9, {2, 5, 8}));
    CHECK(c == ks(6, {1, 3, 5}));
    CHECK(d == ks(6, {2, 4, 6}));
    const auto [e, f] = collapse(ks(4, {1, 2}), ks(4, {1, 3}));
    CHECK(e == ks(2, {1}));
    CHECK(f == ks(2, {2}));
    CHECK_THROWS_AS(collapse(ks(9, {1, 4, 7}), ks(9, {1, 4, 7})), domain_error);
}

TEST_CASE("a-shift") {
    const auto I = ks(16, {4, 5, 8, 10, 13, 14, 16});
    const auto J = ks(16, {1, 2, 6, 7, 11, 13, 15});
    const auto [a, b] = a_shift(I, J, 2);
    CHECK(a == ks(16, {2, 6, 7, 11, 13, 14, 16}));
    CHECK(b == ks(16, {1, 4, 5, 8, 10, 13, 15}));
    const auto [c, d] = a_shift(I, J, 0);
    CHECK(c == I);
    CHECK(d == J);
    const auto [e, f] = a_shift(I, J, 12); // n' = 12 is a full cycle
    CHECK(e == I);
    CHECK(f == J);
}

TEST_CASE("quasi-box count is invariant under a-shift and collapse") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 6 + static_cast<int>(rng.next() % 8);
        const int k = 2 + static_cast<int>(rng.next() % (n / 2 - 1));
        const auto I = random_subset(rng, k, n);
        const auto J = random_subset(rng, k, n);
        if (I == J) continue;
        const auto base = quasi_boxes(I, J);
        const auto [ci, cj] = collapse(I, J);
        CHECK(quasi_boxes(ci, cj).size() == base.size());
        const int a = 1 + static_cast<int>(rng.next() % ci.n);
        const auto [si, sj] = a_shift(I, J, a);
        CHECK(quasi_boxes(si, sj).size() == base.size());
        // sizes survive collapse after discounting the removed parallel edges
        const auto collapsed = quasi_boxes(ci, cj);
        std::multiset<std::pair<int, int>> lhs, rhs;
        for (const auto& b : base) {
            int shared = 0, coshared = 0;
            for (int e : b.arc_edges) {
                if (I.contains(e) && J.contains(e)) ++shared;
                if (!I.contains(e) && !J.contains(e)) ++coshared;
            }
            lhs.insert({b.size - shared, b.cosize - coshared});
        }
        for (const auto& b : collapsed) rhs.insert({b.size, b.cosize});
        CHECK(lhs == rhs);
        // boxes stay boxes under collapse
        int base_boxes = 0, coll_boxes = 0;
        for (const auto& b : base) base_boxes += b.is_box;
        for (const auto& b : collapsed) coll_boxes += b.is_box;
        CHECK(base_boxes <= coll_boxes);
    }
}

TEST_CASE("size sums on fully reduced pairs") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 6 + static_cast<int>(rng.next() % 8);
        const int k = 2 + static_cast<int>(rng.next() % (n / 2 - 1));
        const auto I = random_subset(rng, k, n);
        const auto J = random_subset(rng, k, n);
        if (I == J) continue;
        const auto [ci, cj] = collapse(I, J);
        int size_sum = 0, cosize_sum = 0;
        for (const auto& b : quasi_boxes(ci, cj)) {
            size_sum += b.size;
            cosize_sum += b.cosize;
        }
        CHECK(size_sum == ci.k());
        CHECK(cosize_sum == ci.n - ci.k());
        const auto deg = interlacing_degree(ci, cj);
        if (deg && *deg > 0)
            CHECK(static_cast<size_t>(*deg) == quasi_boxes(ci, cj).size());
    }
}

TEST_CASE("content and multiplicity vector") {
    const auto P = profile_from_string("359|258|147|146", 9);
    CHECK(multiplicity_vector(P) == std::vector<long long>{2, 1, 1, 2, 2, 1, 1, 1, 1});
    const auto single = profile_from_string("147", 9);
    CHECK(multiplicity_vector(single) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1, 0, 0});
    const auto disj = profile_from_string("147|258|369", 9);
    CHECK(multiplicity_vector(disj) == std::vector<long long>(9, 1));
    const auto x = multiplicity_vector(P);
    CHECK(std::accumulate(x.begin(), x.end(), 0LL) == 4 * 3);
}

TEST_CASE("canonical predicates") {
    CHECK(is_canonical(profile_from_string("359|258|147|146", 9)));
    CHECK(is_canonical(profile_from_string("147", 9)));
    CHECK(!is_weakly_column_decreasing(profile_from_string("147|258|369", 9)));
    CHECK(is_weakly_column_decreasing(profile_from_string("369|258|147", 9)));
    CHECK(is_canonical(profile_from_string("369|258|147", 9)));
}

TEST_CASE("cyclic permutations and canonical rotation") {
    const auto P = profile_from_string("147|369|258", 9);
    const auto rots = cyclic_permutations(P);
    REQUIRE(rots.size() == 3);
    CHECK(rots[0] == P);
    CHECK(rots[1] == profile_from_string("369|258|147", 9));
    CHECK(rots[2] == profile_from_string("258|147|369", 9));
    const auto c1 = canonical_rotation(profile_from_string("258|147|136", 9));
    REQUIRE(c1.has_value());
    CHECK(*c1 == profile_from_string("258|147|136", 9));
    const auto c2 = canonical_rotation(profile_from_string("136|258|147", 9));
    REQUIRE(c2.has_value());
    CHECK(*c2 == profile_from_string("258|147|136", 9));
}

TEST_CASE("profile shift") {
    const auto P = profile_from_string("157|369|248", 9);
    CHECK(profile_shift(P, 1) == profile_from_string("268|147|359", 9));
    CHECK(profile_shift(P, 0) == P);
    CHECK(profile_shift(P, 9) == P);
    // interlacing degrees survive shifts
    for (int a = 1; a < 9; ++a) {
        const auto Q = profile_shift(P, a);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(interlacing_degree(Q.rows[i], Q.rows[j]) ==
                      interlacing_degree(P.rows[i], P.rows[j]));
    }
}

TEST_CASE("increase and decrease") {
    const auto P = profile_from_string("147|258", 9);
    const auto up = increase(P, 9, IncMode::subset);
    CHECK(up.n == 10);
    CHECK(up.k == 4);
    CHECK(up.rows[0] == ks(10, {1, 4, 7, 10}));
    CHECK(up.rows[1] == ks(10, {2, 5, 8, 10}));
    CHECK(decrease(up, 10, IncMode::subset) == P);

    const auto single = Profile(4, 2, {ks(4, {1, 2})});
    const auto co = increase(single, 2, IncMode::complement);
    CHECK(co.n == 5);
    CHECK(co.k == 2);
    CHECK(co.rows[0] == ks(5, {1, 2}));
    CHECK(decrease(co, 3, IncMode::complement) == single);

    // inverse pair at arbitrary positions
    SplitMix64 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 6 + static_cast<int>(rng.next() % 6);
        const auto I = random_subset(rng, 3, n);
        const auto J = random_subset(rng, 3, n);
        const Profile Q(n, 3, {I, J});
        const int j = 1 + static_cast<int>(rng.next() % n);
        CHECK(decrease(increase(Q, j, IncMode::subset), j + 1, IncMode::subset) == Q);
        CHECK(decrease(increase(Q, j, IncMode::complement), j + 1, IncMode::complement) == Q);
    }
    CHECK_THROWS_AS(decrease(P, 1, IncMode::subset), domain_error);
    CHECK_THROWS_AS(decrease(P, 1, IncMode::complement), domain_error);
}

TEST_CASE("full reduction of a rank-2 pair equals collapse") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 6 + static_cast<int>(rng.next() % 6);
        const int k = 2 + static_cast<int>(rng.next() % (n / 2 - 1));
        const auto I = random_subset(rng, k, n);
        const auto J = random_subset(rng, k, n);
        if (I == J) continue;
        Profile Q(n, k, {I, J});
        bool again = true;
        while (again) {
            again = false;
            for (int j = 1; j <= Q.n; ++j) {
                if (Q.rows[0].contains(j) && Q.rows[1].contains(j)) {
                    Q = decrease(Q, j, IncMode::subset);
                    again = true;
                    break;
                }
                if (!Q.rows[0].contains(j) && !Q.rows[1].contains(j)) {
                    Q = decrease(Q, j, IncMode::complement);
                    again = true;
                    break;
                }
            }
        }
        const auto [ci, cj] = collapse(I, J);
        CHECK(Q.rows[0] == ci);
        CHECK(Q.rows[1] == cj);
    }
}

TEST_CASE("successive-row interlacing does not imply full interlacing") {
    // rows 1 and 3 of this 4-row profile fail to interlace
    const Profile P(30, 4,
                    {ks(30, {1, 8, 15, 20}), ks(30, {2, 11, 18, 23}),
                     ks(30, {5, 17, 21, 30}), ks(30, {4, 13, 19, 29})});
    for (int i = 0; i + 1 < 4; ++i)
        CHECK(interlacing_degree(P.rows[i], P.rows[i + 1]).has_value());
    CHECK(interlacing_degree(P.rows[0], P.rows[3]).has_value());
    CHECK(!interlacing_degree(P.rows[0], P.rows[2]).has_value());
    CHECK(!is_interlacing(P));
}

TEST_CASE("compact string round trip") {
    CHECK(to_compact_string(profile_from_string("359|258|147|146", 9)) == "359|258|147|146");
    const Profile wide(16, 2, {ks(16, {1, 15}), ks(16, {2, 11})});
    CHECK(to_compact_string(wide) == "1 15|2 11");
    CHECK(profile_from_string("1 15|2 11", 16) == wide);
}
