#include "grasscat/enumeration.hpp"

#include "grasscat/roots.hpp"

#include <algorithm>

namespace grasscat {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::array<long long, 3> partition_counts(int r) {
    std::array<long long, 3> p{0, 0, 0};
    for (int r1 = 1; r1 <= r; ++r1)
        for (int r2 = r1; r2 <= r; ++r2) {
            const int r3 = r - r1 - r2;
            if (r3 < r2) break;
            const int distinct = 1 + (r2 != r1) + (r3 != r2 && r3 != r1);
            p[distinct - 1]++;
        }
    return p;
}

long long n_kn(int k, int n) {
    if (k < 3) return 0;
    long long total = 0;
    for (int r = 3; r <= k; ++r) {
        const auto p = partition_counts(r);
        // p1(r) != 0 only when 3 | r, so 2r/3 * p1 stays integral.
        const long long shapes = 2LL * r * p[0] / 3 + 2LL * r * p[1] + 4LL * r * p[2];
        total += shapes * binomial(n, 2 * r) * binomial(n - 2 * r, k - r);
    }
    return total;
}

long long enumerate_three_box_rank2(int k, int n,
                                    const std::function<void(const Profile&)>& sink) {
    const auto subsets = all_k_subsets(k, n);
    long long count = 0;
    for (const auto& I : subsets)
        for (const auto& J : subsets) {
            if (I == J) continue;
            const auto [ci, cj] = collapse(I, J);
            if (ci.k() < 3) continue; // box sizes sum to the reduced k
            const auto boxes = quasi_boxes(ci, cj);
            if (boxes.size() != 3) continue;
            if (!std::all_of(boxes.begin(), boxes.end(),
                             [](const QuasiBox& b) { return b.is_box; }))
                continue;
            ++count;
            if (sink) sink(Profile(n, k, {I, J}));
        }
    return count;
}

std::vector<Profile> enumerate_three_box_rank2(int k, int n) {
    std::vector<Profile> out;
    enumerate_three_box_rank2(k, n, [&](const Profile& P) { out.push_back(P); });
    return out;
}

namespace {

void extend_canonical(const std::vector<KSubset>& subsets, std::vector<KSubset>& rows,
                      int m, std::vector<Profile>& out, int n, int k) {
    if (static_cast<int>(rows.size()) == m) {
        Profile P(n, k, rows);
        if (!is_canonical(P)) return;
        if (quad_form(RootVector(n, k, multiplicity_vector(P))) != Rational(2)) return;
        out.push_back(std::move(P));
        return;
    }
    for (const auto& S : subsets) {
        if (!rows.empty()) {
            bool ok = true;
            for (int j = 0; j < k; ++j)
                if (rows.back().elems[j] < S.elems[j]) { ok = false; break; }
            if (!ok) continue;
        }
        rows.push_back(S);
        extend_canonical(subsets, rows, m, out, n, k);
        rows.pop_back();
    }
}

} // namespace

std::vector<Profile> enumerate_canonical_real(int k, int n, int m) {
    std::vector<Profile> out;
    const auto subsets = all_k_subsets(k, n);
    std::vector<KSubset> rows;
    extend_canonical(subsets, rows, m, out, n, k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Row patterns of the twelve imaginary profiles, as indices into i_1..i_9.
// The first nine are the rigid family, the last three the tau-invariant one.
constexpr int kImaginaryPatterns[12][3][3] = {
    {{1, 5, 7}, {3, 6, 9}, {2, 4, 8}}, {{2, 6, 8}, {1, 4, 7}, {3, 5, 9}},
    {{3, 7, 9}, {2, 5, 8}, {1, 4, 6}}, {{1, 4, 8}, {3, 6, 9}, {2, 5, 7}},
    {{2, 5, 9}, {1, 4, 7}, {3, 6, 8}}, {{1, 3, 6}, {2, 5, 8}, {4, 7, 9}},
    {{2, 4, 7}, {3, 6, 9}, {1, 5, 8}}, {{3, 5, 8}, {1, 4, 7}, {2, 6, 9}},
    {{4, 6, 9}, {2, 5, 8}, {1, 3, 7}}, {{1, 4, 7}, {3, 6, 9}, {2, 5, 8}},
    {{2, 5, 8}, {1, 4, 7}, {3, 6, 9}}, {{3, 6, 9}, {2, 5, 8}, {1, 4, 7}},
};

} // namespace

std::vector<ImaginaryRank3> enumerate_imaginary_rank3(int n) {
    std::vector<ImaginaryRank3> out;
    if (n < 9) return out;
    std::vector<int> tuple(9);
    for (int i = 0; i < 9; ++i) tuple[i] = i + 1;
    while (true) {
        for (int p = 0; p < 12; ++p) {
            std::vector<KSubset> rows;
            for (int r = 0; r < 3; ++r) {
                std::vector<int> e;
                for (int j = 0; j < 3; ++j) e.push_back(tuple[kImaginaryPatterns[p][r][j] - 1]);
                rows.emplace_back(n, std::move(e));
            }
            out.push_back({Profile(n, 3, std::move(rows)), p + 1, p < 9});
        }
        int i = 8;
        while (i >= 0 && tuple[i] == n - (8 - i)) --i;
        if (i < 0) break;
        ++tuple[i];
        for (int j = i + 1; j < 9; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

} // namespace grasscat
