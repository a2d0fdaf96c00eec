#include "grasscat/configs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grasscat {

std::vector<int> SubspacePoset::out_neighbors(int u) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges)
        if (a == u) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SubspacePoset::in_neighbors(int w) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges)
        if (b == w) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

bool SubspacePoset::has_edge(int u, int w) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(u, w)) != edges.end();
}

std::string to_string(Indec v) {
    switch (v) {
        case Indec::Yes: return "yes";
        case Indec::No: return "no";
        default: return "unknown";
    }
}

SubspacePoset poset_from_profile(const Profile& P) {
    const int m = P.rank();
    if (m < 2) throw domain_error("no configuration for rank < 2");
    SubspacePoset S;
    std::vector<std::vector<std::set<int>>> arcs(m - 1); // arcs[r][box] = edge labels
    for (int r = 0; r + 1 < m; ++r) {
        for (const auto& qb : quasi_boxes(P.rows[r], P.rows[r + 1])) {
            arcs[r].emplace_back(qb.arc_edges.begin(), qb.arc_edges.end());
            S.mult.push_back(r + 1);
        }
    }
    const int bottom = static_cast<int>(S.mult.size());
    S.mult.push_back(m);
    // vertex ids: level blocks in order, then the bottom vertex
    std::vector<int> level_base(m, 0);
    for (int r = 1; r < m - 1; ++r)
        level_base[r] = level_base[r - 1] + static_cast<int>(arcs[r - 1].size());
    for (int r = 0; r + 2 < m; ++r) {
        for (size_t a = 0; a < arcs[r].size(); ++a)
            for (size_t b = 0; b < arcs[r + 1].size(); ++b) {
                bool overlap = false;
                for (int e : arcs[r][a])
                    if (arcs[r + 1][b].count(e)) { overlap = true; break; }
                if (overlap)
                    S.edges.emplace_back(level_base[r] + static_cast<int>(a),
                                         level_base[r + 1] + static_cast<int>(b));
            }
    }
    for (size_t a = 0; a < arcs[m - 2].size(); ++a)
        S.edges.emplace_back(level_base[m - 2] + static_cast<int>(a), bottom);
    return S;
}

namespace {

SubspacePoset drop_vertex(const SubspacePoset& S, int v) {
    SubspacePoset out;
    std::vector<int> remap(S.vertex_count(), -1);
    for (int u = 0; u < S.vertex_count(); ++u) {
        if (u == v) continue;
        remap[u] = out.vertex_count();
        out.mult.push_back(S.mult[u]);
    }
    for (const auto& [a, b] : S.edges)
        if (a != v && b != v) out.edges.emplace_back(remap[a], remap[b]);
    return out;
}

// u is redundant when some t >= 2 of its out-neighbors all map into a common
// vertex and their generic intersection there has exactly dimension mult(u).
bool removable(const SubspacePoset& S, int u) {
    if (!S.in_neighbors(u).empty()) return false;
    const auto outs = S.out_neighbors(u);
    const int t_max = static_cast<int>(outs.size());
    if (t_max < 2) return false;
    for (int mask = 1; mask < (1 << t_max); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
        long long sum = 0;
        int t = 0;
        for (int i = 0; i < t_max; ++i)
            if (mask & (1 << i)) { sum += S.mult[outs[i]]; ++t; }
        for (int z = 0; z < S.vertex_count(); ++z) {
            bool common = true;
            for (int i = 0; i < t_max && common; ++i)
                if ((mask & (1 << i)) && !S.has_edge(outs[i], z)) common = false;
            if (!common) continue;
            const long long dim = sum - static_cast<long long>(t - 1) * S.mult[z];
            if (dim >= 0 && dim == S.mult[u]) return true;
        }
    }
    return false;
}

} // namespace

SubspacePoset simplify(const SubspacePoset& S0) {
    SubspacePoset S = S0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < S.vertex_count(); ++u) {
            if (removable(S, u)) {
                S = drop_vertex(S, u);
                changed = true;
                break;
            }
        }
    }
    return S;
}

namespace {

std::vector<std::vector<int>> adjacency(const SubspacePoset& S) {
    std::vector<std::vector<int>> adj(S.vertex_count());
    for (const auto& [a, b] : S.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool connected(const SubspacePoset& S) {
    const int nv = S.vertex_count();
    if (nv == 0) return false;
    const auto adj = adjacency(S);
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = 1; ++reached; stack.push_back(w); }
    }
    return reached == nv;
}

// Simply-laced Dynkin graphs: trees with at most one degree-3 vertex whose
// arm lengths are (1,1,*) or (1,2,x) with x <= 4, and no higher degrees.
bool is_ade(const SubspacePoset& S) {
    const int nv = S.vertex_count();
    if (!connected(S)) return false;
    if (static_cast<int>(S.edges.size()) != nv - 1) return false; // cycles
    const auto adj = adjacency(S);
    for (int v = 0; v < nv; ++v) {
        std::set<int> distinct(adj[v].begin(), adj[v].end());
        if (distinct.size() != adj[v].size()) return false; // multi-edge
    }
    int branch = -1;
    for (int v = 0; v < nv; ++v) {
        if (adj[v].size() > 3) return false;
        if (adj[v].size() == 3) {
            if (branch >= 0) return false;
            branch = v;
        }
    }
    if (branch < 0) return true; // type A
    std::vector<int> arms;
    for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return false;
    if (arms[1] == 1) return true;                  // type D
    return arms[1] == 2 && arms[2] <= 4;            // E6, E7, E8
}

} // namespace

long long tits_form(const SubspacePoset& S) {
    long long q = 0;
    for (int v = 0; v < S.vertex_count(); ++v)
        q += static_cast<long long>(S.mult[v]) * S.mult[v];
    for (const auto& [a, b] : S.edges) q -= static_cast<long long>(S.mult[a]) * S.mult[b];
    return q;
}

Indec generic_indecomposable(const SubspacePoset& S) {
    if (S.vertex_count() == 0) return Indec::No;
    if (S.vertex_count() == 1) return S.mult[0] == 1 ? Indec::Yes : Indec::No;
    if (!connected(S)) return Indec::No;
    if (!is_ade(S)) return Indec::Unknown;
    return tits_form(S) == 1 ? Indec::Yes : Indec::No;
}

bool root_exists(const SubspacePoset& S) {
    const int nv = S.vertex_count();
    if (nv == 0) return false;
    std::vector<long long> d(S.mult.begin(), S.mult.end());
    const auto adj = adjacency(S);
    // d > 0 with connected support by construction; reduce by reflections.
    while (true) {
        bool simple = false, zero = true;
        int nonzero = 0;
        for (int v = 0; v < nv; ++v) {
            if (d[v] != 0) { ++nonzero; zero = d[v] == 0 && zero; }
        }
        if (nonzero == 1) {
            for (int v = 0; v < nv; ++v)
                if (d[v] == 1) simple = true;
            return simple; // c*alpha_v is a root only for c = 1
        }
        int pos = -1;
        for (int v = 0; v < nv && pos < 0; ++v) {
            long long pairing = 2 * d[v];
            for (int w : adj[v]) pairing -= d[w];
            if (d[v] != 0 && pairing > 0) pos = v;
        }
        if (pos < 0) {
            // fundamental-region candidate: imaginary root iff support connected
            std::vector<char> in(nv, 0);
            int start = -1;
            for (int v = 0; v < nv; ++v) {
                in[v] = d[v] != 0;
                if (in[v] && start < 0) start = v;
            }
            std::vector<char> seen(nv, 0);
            std::vector<int> stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (in[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
            }
            for (int v = 0; v < nv; ++v)
                if (in[v] && !seen[v]) return false;
            return true;
        }
        long long nb = 0;
        for (int w : adj[pos]) nb += d[w];
        d[pos] = nb - d[pos];
        if (d[pos] < 0) return false; // left the positive cone: not a root
    }
}

std::string to_dot(const SubspacePoset& S) {
    std::ostringstream os;
    os << "graph poset {\n";
    for (int v = 0; v < S.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << S.mult[v] << "\"];\n";
    for (const auto& [a, b] : S.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace grasscat
