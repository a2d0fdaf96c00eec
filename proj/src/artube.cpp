#include "grasscat/artube.hpp"

#include "grasscat/enumeration.hpp"

#include <algorithm>
#include <set>

namespace grasscat {

namespace {

// maximal cyclic runs of I, each as (start, length), sorted by start
std::vector<std::pair<int, int>> cyclic_runs(const KSubset& I) {
    std::vector<std::pair<int, int>> runs;
    if (I.k() == I.n) return {{1, I.n}};
    for (int s = 1; s <= I.n; ++s) {
        if (!I.contains(s) || I.contains(mod1(s - 1, I.n))) continue;
        int len = 1;
        while (I.contains(mod1(s + len, I.n))) ++len;
        runs.emplace_back(s, len);
    }
    return runs;
}

} // namespace

Profile tau_inverse_rank1_two_intervals(const KSubset& I) {
    const int n = I.n, k = I.k();
    auto runs = cyclic_runs(I);
    if (runs.size() != 2)
        throw domain_error("tau_inverse_rank1: subset must have exactly two intervals");
    if (runs[0].second != 1) std::swap(runs[0], runs[1]);
    if (runs[0].second != 1 || runs[1].second != k - 1)
        throw domain_error("tau_inverse_rank1: intervals must have sizes 1 and k-1");
    const int i = runs[0].first, j = runs[1].first;
    std::vector<int> J;
    for (int d = 1; d <= k - 1; ++d) J.push_back(mod1(i + d, n));
    J.push_back(mod1(j + k - 1, n));
    return Profile(n, k, {KSubset(n, std::move(J))});
}

ArStart ar_sequence_start(const KSubset& I) {
    if (I.k() != 3) throw domain_error("ar_sequence_start: needs k = 3");
    for (int e : I.elems)
        if (I.contains(mod1(e + 1, I.n)))
            throw domain_error("ar_sequence_start: subset must have three peaks");
    ArStart out{shift_subset(I, 1), shift_subset(I, 2), Profile(), Profile()};
    out.end_term = Profile(I.n, 3, {out.X, out.Y});
    out.middle = Profile(I.n, 3, {out.X, I, out.Y});
    return out;
}

ArSplit ar_split_rule(int n, int i, bool dual) {
    if (n == 6)
        throw domain_error("ar_split_rule: excluded case, the splitting needs n >= 7");
    if (n < 7) throw domain_error("ar_split_rule: n too small");
    auto sub = [&](std::initializer_list<int> offs) {
        std::vector<int> e;
        for (int o : offs) e.push_back(mod1(i + o, n));
        return KSubset(n, std::move(e));
    };
    ArSplit out;
    if (!dual) {
        out.summand = sub({1, 2, 4});
        out.rest = Profile(n, 3, {sub({0, 3, 5}), sub({2, 4, 6})});
    } else {
        out.summand = sub({0, 2, 3});
        out.rest = Profile(n, 3, {sub({-2, 0, 2}), sub({-1, 1, 4})});
    }
    return out;
}

namespace {

bool is_projective_row(const KSubset& I) {
    return cyclic_runs(I).size() == 1;
}

// all ways to fill the remaining rows of a canonical-candidate profile so
// that the total multiset of entries matches `need`
void rank3_candidates_rec(const std::vector<KSubset>& pool, std::vector<KSubset>& rows,
                          std::vector<int>& need, int n, std::set<Profile>& out) {
    if (rows.size() == 3) {
        if (std::all_of(need.begin(), need.end(), [](int c) { return c == 0; })) {
            Profile P(n, 3, rows);
            if (is_canonical(P))
                for (const auto& rot : cyclic_permutations(P)) out.insert(rot);
        }
        return;
    }
    for (const auto& S : pool) {
        bool ok = true;
        for (int e : S.elems)
            if (need[e - 1] <= 0) { ok = false; break; }
        if (!ok) continue;
        for (int e : S.elems) --need[e - 1];
        rows.push_back(S);
        rank3_candidates_rec(pool, rows, need, n, out);
        rows.pop_back();
        for (int e : S.elems) ++need[e - 1];
    }
}

std::vector<Profile> candidates_for(int rank, const std::vector<long long>& x, int n, int k) {
    std::vector<Profile> out;
    if (rank == 1) {
        std::vector<int> e;
        for (int i = 1; i <= n; ++i)
            if (x[i - 1] == 1) e.push_back(i);
        if (static_cast<int>(e.size()) == k) out.emplace_back(n, k, std::vector<KSubset>{KSubset(n, e)});
        return out;
    }
    if (rank == 2) {
        std::vector<int> shared, singles;
        for (int i = 1; i <= n; ++i) {
            if (x[i - 1] == 2) shared.push_back(i);
            else if (x[i - 1] == 1) singles.push_back(i);
            else if (x[i - 1] > 2) return out;
        }
        const int half = k - static_cast<int>(shared.size());
        if (half < 0 || static_cast<int>(singles.size()) != 2 * half) return out;
        const int m2 = static_cast<int>(singles.size());
        for (int mask = 0; mask < (1 << m2); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != half) continue;
            std::vector<int> a = shared, b = shared;
            for (int i = 0; i < m2; ++i)
                (mask & (1 << i) ? a : b).push_back(singles[i]);
            // rigid rank-2 profiles form exactly three boxes; other splits of
            // the same content are spurious filtrations of the same module
            const KSubset A(n, a), B(n, b);
            const auto [ca, cb] = collapse(A, B);
            const auto boxes = quasi_boxes(ca, cb);
            if (boxes.size() != 3 ||
                !std::all_of(boxes.begin(), boxes.end(),
                             [](const QuasiBox& qb) { return qb.is_box; }))
                continue;
            out.emplace_back(n, k, std::vector<KSubset>{A, B});
        }
        return out;
    }
    if (rank == 3 && k == 3) {
        std::set<Profile> cands;
        // cyclic permutations of canonical profiles with this content
        std::vector<int> support;
        for (int i = 1; i <= n; ++i)
            if (x[i - 1] > 0) support.push_back(i);
        std::vector<KSubset> pool;
        for (const auto& S : all_k_subsets(k, n)) {
            bool ok = true;
            for (int e : S.elems)
                if (x[e - 1] == 0) { ok = false; break; }
            if (ok) pool.push_back(S);
        }
        std::vector<KSubset> rows;
        std::vector<int> need(x.begin(), x.end());
        rank3_candidates_rec(pool, rows, need, n, cands);
        // imaginary patterns over the support when the content is all-ones
        if (static_cast<int>(support.size()) == 9 &&
            std::all_of(support.begin(), support.end(), [&](int i) { return x[i - 1] == 1; })) {
            for (const auto& im : enumerate_imaginary_rank3(n)) {
                if (multiplicity_vector(im.profile) ==
                    std::vector<long long>(x.begin(), x.end()))
                    cands.insert(im.profile);
            }
        }
        return {cands.begin(), cands.end()};
    }
    return out;
}

} // namespace

RecoveryResult tau_inverse_profile(const Profile& P, const RecoveryOptions& opt) {
    if (P.rank() == 1 && is_projective_row(P.rows.front()))
        throw domain_error("tau_inverse_profile: projective module has trivial syzygy");
    const TruncatedRing R(opt.prime,
                          opt.truncation > 0 ? opt.truncation : default_truncation(P.n));
    const std::uint64_t seed0 = opt.seeds.empty() ? 1 : opt.seeds.front();
    const TruncatedModule M = build_from_profile(R, P, seed0);
    const SyzygyData syz = syzygy_data(M);
    const TruncatedModule& Om = syz.omega;
    if (Om.empty()) throw domain_error("tau_inverse_profile: trivial syzygy");
    const auto x = content_vector(Om);
    const auto cover = projective_cover_indices(Om);
    const auto candidates = candidates_for(Om.s, x, P.n, P.k);
    if (candidates.empty())
        throw domain_error("profile recovery failed: no candidate matches content " +
                           to_compact_string(P));
    std::vector<Profile> cover_matched;
    for (const auto& Q : candidates) {
        for (const std::uint64_t seed : opt.seeds) {
            TruncatedModule MQ = build_from_profile(R, Q, seed);
            if (projective_cover_indices(MQ) != cover) continue;
            if (cover_matched.empty() || cover_matched.back() != Q)
                cover_matched.push_back(Q);
            if (are_isomorphic(MQ, Om, opt.iso_trials, seed0 ^ 0x9e37u))
                return {Q, true};
        }
    }
    if (cover_matched.size() == 1 && opt.allow_unique_unverified)
        return {cover_matched.front(), false};
    throw domain_error("profile recovery failed: " +
                       std::to_string(cover_matched.size()) +
                       " cover-matched candidates for " + to_compact_string(P));
}

TubeRow tube_walk(const Profile& P, int max_steps, const RecoveryOptions& opt) {
    TubeRow out;
    out.entries.push_back(P);
    Profile cur = P;
    for (int step = 1; step <= max_steps; ++step) {
        cur = tau_inverse_profile(cur, opt).profile;
        if (cur == P) {
            out.period = step;
            return out;
        }
        out.entries.push_back(cur);
    }
    return out;
}

std::vector<CensusEntry> census_39() {
    const auto canon = enumerate_canonical_real(3, 9, 3);
    if (canon.size() != 72)
        throw domain_error("census_39: expected 72 canonical real profiles, got " +
                           std::to_string(canon.size()));
    std::vector<Profile> profiles;
    for (const auto& C : canon)
        for (const auto& rot : cyclic_permutations(C)) profiles.push_back(rot);
    const Profile imag = profile_from_string("157|369|248", 9);
    for (int a = 0; a < 9; ++a) profiles.push_back(profile_shift(imag, a));
    std::set<Profile> distinct(profiles.begin(), profiles.end());
    if (distinct.size() != profiles.size() || profiles.size() != 225)
        throw domain_error("census_39: duplicate profiles in census");
    std::vector<CensusEntry> out;
    for (size_t idx = 0; idx < profiles.size(); ++idx) {
        CensusEntry e;
        e.profile = profiles[idx];
        const auto data = profile_root(e.profile);
        e.q = data.q;
        e.type = data.type;
        const bool imaginary = idx >= 216;
        if (imaginary && e.type != RootType::ImaginaryRoot)
            throw domain_error("census_39: misclassified imaginary profile");
        if (!imaginary && e.type != RootType::RealRoot)
            throw domain_error("census_39: misclassified real profile");
        Profile best = e.profile;
        for (int a = 1; a < 9; ++a) best = std::min(best, profile_shift(e.profile, a));
        e.orbit = to_compact_string(best);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace grasscat
