#pragma once

#include "grasscat/profiles.hpp"

#include <string>

namespace grasscat {

/// Multiplicities-on-vertices poset of a subspace configuration.
/// Edges go from the smaller multiplicity to the strictly larger one.
struct SubspacePoset {
    std::vector<int> mult;                    // mult[v] for vertex id v
    std::vector<std::pair<int, int>> edges;   // (u, w) with mult[u] < mult[w]

    int vertex_count() const { return static_cast<int>(mult.size()); }
    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int w) const;
    bool has_edge(int u, int w) const;
};

enum class Indec { Yes, No, Unknown };

std::string to_string(Indec v);

/// Extract the configuration poset of a profile from its close-packed
/// contours: one vertex of multiplicity r per quasi-box between rows r and
/// r+1, one bottom vertex of multiplicity m, edges where cyclic arcs share
/// an edge position. Requires m >= 2.
SubspacePoset poset_from_profile(const Profile& P);

/// Remove source vertices that are forced as the generic intersection of
/// out-neighbors inside a common vertex: u is dropped when some subset
/// {w_1..w_t} (t >= 2) of its out-neighbors all map into a vertex z and
/// mult(u) = sum mult(w_i) - (t-1) mult(z). Iterated to a fixed point,
/// smallest-id first.
SubspacePoset simplify(const SubspacePoset& S);

/// Dynkin route: if the underlying graph is simply-laced Dynkin (A/D/E),
/// Yes iff the multiplicity vector is a positive root (Tits form = 1);
/// a disconnected graph is No; anything else is Unknown and the caller
/// must fall back to an oracle.
Indec generic_indecomposable(const SubspacePoset& S);

/// Whether the multiplicity vector is a root of the Kac-Moody root system
/// of the underlying graph (reflection reduction on an arbitrary simple
/// graph). Decides existence of an indecomposable representation.
bool root_exists(const SubspacePoset& S);

/// Tits form q(d) = sum d_v^2 - sum_{edges} d_u d_w of the underlying graph.
long long tits_form(const SubspacePoset& S);

/// DOT rendering with multiplicities as vertex labels.
std::string to_dot(const SubspacePoset& S);

} // namespace grasscat
