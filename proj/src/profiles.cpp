#include "grasscat/profiles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace grasscat {

Profile::Profile(int n_, int k_, std::vector<KSubset> rows_)
    : n(n_), k(k_), rows(std::move(rows_)) {
    if (rows.empty()) throw std::invalid_argument("Profile: needs at least one row");
    for (const auto& r : rows)
        if (r.n != n || r.k() != k)
            throw std::invalid_argument("Profile: all rows must share (k, n)");
}

std::vector<int> rim_difference(const KSubset& I, const KSubset& J) {
    if (I.n != J.n || I.k() != J.k()) throw domain_error("rim_difference: mismatched (k, n)");
    const int n = I.n;
    std::vector<int> d(n + 1, 0);
    for (int j = 1; j <= n; ++j)
        d[j] = d[j - 1] + (J.contains(j) ? 1 : 0) - (I.contains(j) ? 1 : 0);
    const int lo = *std::min_element(d.begin() + 1, d.end());
    for (int j = 1; j <= n; ++j) d[j] -= lo;
    d[0] = d[n];
    return d;
}

std::vector<QuasiBox> quasi_boxes(const KSubset& I, const KSubset& J) {
    std::vector<QuasiBox> out;
    if (I == J) return out;
    const int n = I.n;
    const auto d = rim_difference(I, J);
    std::vector<int> zeros;
    for (int j = 1; j <= n; ++j)
        if (d[j] == 0) zeros.push_back(j);
    const int m = static_cast<int>(zeros.size());
    for (int i = 0; i < m; ++i) {
        const int z0 = zeros[i];
        const int z1 = zeros[(i + 1) % m];
        int len = z1 - z0;
        if (len <= 0) len += n;
        if (len == 1 && m > 1) continue; // parallel segment, no region
        QuasiBox qb;
        qb.arc_start = z0;
        qb.arc_end = z1;
        bool interior = false;
        for (int s = 1; s <= len; ++s) {
            const int e = mod1(z0 + s, n);
            qb.arc_edges.push_back(e);
            if (s < len && d[e] > 0) interior = true;
        }
        if (!interior) continue;
        // Rectangle test: the lower rim must descend first (J-edges form a
        // prefix of the arc) and the upper rim descend last (I-edges a suffix).
        int first_I = len, last_nonI = -1, first_nonJ = len, last_J = -1;
        for (int s = 0; s < len; ++s) {
            const int e = qb.arc_edges[s];
            if (I.contains(e)) { qb.size++; first_I = std::min(first_I, s); }
            else last_nonI = s;
            if (!I.contains(e)) qb.cosize++;
            if (J.contains(e)) last_J = s;
            else first_nonJ = std::min(first_nonJ, s);
        }
        qb.is_box = (last_nonI < first_I) && (last_J < first_nonJ);
        out.push_back(std::move(qb));
    }
    return out;
}

std::pair<KSubset, KSubset> collapse(const KSubset& I, const KSubset& J) {
    if (I.n != J.n || I.k() != J.k()) throw domain_error("collapse: mismatched (k, n)");
    if (I == J) throw domain_error("degenerate collapse");
    const int n = I.n;
    std::map<int, int> psi;
    int next = 1;
    for (int i = 1; i <= n; ++i) {
        const bool both = I.contains(i) && J.contains(i);
        const bool neither = !I.contains(i) && !J.contains(i);
        if (!both && !neither) psi[i] = next++;
    }
    const int np = next - 1;
    std::vector<int> a, b;
    for (int e : I.elems)
        if (psi.count(e)) a.push_back(psi[e]);
    for (int e : J.elems)
        if (psi.count(e)) b.push_back(psi[e]);
    return {KSubset(np, std::move(a)), KSubset(np, std::move(b))};
}

std::pair<KSubset, KSubset> a_shift(const KSubset& I, const KSubset& J, int a) {
    if (I.n != J.n || I.k() != J.k()) throw domain_error("a_shift: mismatched (k, n)");
    if (I == J) throw domain_error("degenerate collapse");
    const int n = I.n;
    std::map<int, int> psi;
    std::vector<int> psi_inv{0};
    int next = 1;
    for (int i = 1; i <= n; ++i) {
        const bool both = I.contains(i) && J.contains(i);
        const bool neither = !I.contains(i) && !J.contains(i);
        if (!both && !neither) {
            psi[i] = next++;
            psi_inv.push_back(i);
        }
    }
    const int np = next - 1;
    auto shift_one = [&](const KSubset& S) {
        std::vector<int> out;
        for (int e : S.elems) {
            if (psi.count(e))
                out.push_back(psi_inv[mod1(psi[e] + static_cast<long long>(a), np)]);
            else if (J.contains(e) && I.contains(e))
                out.push_back(e); // fixed common part
        }
        return KSubset(n, std::move(out));
    };
    return {shift_one(I), shift_one(J)};
}

std::vector<int> content(const Profile& P) {
    std::vector<int> out;
    for (const auto& r : P.rows) out.insert(out.end(), r.elems.begin(), r.elems.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> multiplicity_vector(const Profile& P) {
    std::vector<long long> x(P.n, 0);
    for (const auto& r : P.rows)
        for (int e : r.elems) x[e - 1]++;
    return x;
}

bool is_weakly_column_decreasing(const Profile& P) {
    for (int i = 0; i + 1 < P.rank(); ++i)
        for (int j = 0; j < P.k; ++j)
            if (P.rows[i].elems[j] < P.rows[i + 1].elems[j]) return false;
    return true;
}

bool is_canonical(const Profile& P) {
    if (!is_weakly_column_decreasing(P)) return false;
    const auto& first = P.rows.front().elems;
    const auto& last = P.rows.back().elems;
    for (int j = 1; j < P.k; ++j)
        if (last[j] < first[j - 1]) return false;
    return true;
}

bool is_interlacing(const Profile& P) {
    for (int i = 0; i < P.rank(); ++i)
        for (int j = i + 1; j < P.rank(); ++j)
            if (!interlacing_degree(P.rows[i], P.rows[j])) return false;
    return true;
}

std::vector<Profile> cyclic_permutations(const Profile& P) {
    std::vector<Profile> out;
    const int m = P.rank();
    for (int r = 0; r < m; ++r) {
        std::vector<KSubset> rows;
        for (int i = 0; i < m; ++i) rows.push_back(P.rows[(r + i) % m]);
        out.emplace_back(P.n, P.k, std::move(rows));
    }
    return out;
}

std::optional<Profile> canonical_rotation(const Profile& P) {
    for (const auto& Q : cyclic_permutations(P))
        if (is_canonical(Q)) return Q;
    return std::nullopt;
}

Profile profile_shift(const Profile& P, int a) {
    std::vector<KSubset> rows;
    rows.reserve(P.rank());
    for (const auto& r : P.rows) rows.push_back(shift_subset(r, a));
    return Profile(P.n, P.k, std::move(rows));
}

Profile increase(const Profile& P, int j, IncMode mode) {
    if (j < 1 || j > P.n) throw std::invalid_argument("increase: j out of range");
    std::vector<KSubset> rows;
    for (const auto& r : P.rows) {
        std::vector<int> e;
        for (int i : r.elems) e.push_back(i <= j ? i : i + 1);
        if (mode == IncMode::subset) e.push_back(j + 1);
        rows.emplace_back(P.n + 1, std::move(e));
    }
    return Profile(P.n + 1, mode == IncMode::subset ? P.k + 1 : P.k, std::move(rows));
}

Profile decrease(const Profile& P, int j, IncMode mode) {
    if (j < 1 || j > P.n) throw std::invalid_argument("decrease: j out of range");
    for (const auto& r : P.rows) {
        if (mode == IncMode::subset && !r.contains(j))
            throw domain_error("decrease: label not common to all rows");
        if (mode == IncMode::complement && r.contains(j))
            throw domain_error("decrease: label present in some row");
    }
    std::vector<KSubset> rows;
    for (const auto& r : P.rows) {
        std::vector<int> e;
        for (int i : r.elems) {
            if (i == j) continue;
            e.push_back(i < j ? i : i - 1);
        }
        rows.emplace_back(P.n - 1, std::move(e));
    }
    return Profile(P.n - 1, mode == IncMode::subset ? P.k - 1 : P.k, std::move(rows));
}

std::string to_compact_string(const KSubset& I) {
    std::ostringstream os;
    for (size_t i = 0; i < I.elems.size(); ++i) {
        if (i && I.n > 9) os << ' ';
        os << I.elems[i];
    }
    return os.str();
}

std::string to_compact_string(const Profile& P) {
    std::ostringstream os;
    for (int i = 0; i < P.rank(); ++i) {
        if (i) os << '|';
        os << to_compact_string(P.rows[i]);
    }
    return os.str();
}

Profile profile_from_string(const std::string& s, int n) {
    std::vector<KSubset> rows;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::vector<int> e;
        if (part.find(' ') != std::string::npos || n > 9) {
            std::istringstream ps(part);
            int v;
            while (ps >> v) e.push_back(v);
        } else {
            for (char c : part)
                if (c >= '1' && c <= '9') e.push_back(c - '0');
        }
        rows.emplace_back(n, std::move(e));
    }
    if (rows.empty()) throw std::invalid_argument("profile_from_string: empty");
    const int k = rows.front().k();
    return Profile(n, k, std::move(rows));
}

} // namespace grasscat
