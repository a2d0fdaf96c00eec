#pragma once

#include "grasscat/profiles.hpp"
#include "grasscat/ring.hpp"

namespace grasscat {

/// Explicit representation of a module over the circular quiver, free of
/// rank s at every vertex over F_p[t]/(t^N). X[j-1] is the map x_j from
/// vertex j-1 to vertex j, Y[j-1] the map y_j back; vertex 0 is vertex n.
/// Relations: X_j Y_j = Y_j X_j = t Id and the full x-circle = t^(n-k) Id.
struct TruncatedModule {
    TruncatedRing ring;
    int n = 0;
    int k = 0;
    int s = 0;     // rank
    int prec = 0;  // entries are trusted modulo t^prec
    std::vector<Mat> X, Y;

    bool empty() const { return s == 0; }
};

/// Default truncation: enough headroom over the largest path valuation
/// (n-k)*s seen by the transfer-matrix Hom systems.
int default_truncation(int n);

TruncatedModule build_rank1(const TruncatedRing& R, const KSubset& I);

/// Rank-1 projective with peak at j: L_{ {j+1,...,j+k} }.
TruncatedModule build_projective(const TruncatedRing& R, int n, int k, int j);

/// Verify X_j Y_j = Y_j X_j = t Id and x-circle = t^(n-k) Id up to the
/// module's precision; throws domain_error on violation.
void assert_relations(const TruncatedModule& M);

/// x_i = s - val det X_i; equals the number of profile rows containing i.
std::vector<long long> content_vector(const TruncatedModule& M);

/// Multiset of vertices carrying the top of M (minimal projective cover
/// summand peaks), sorted ascending.
std::vector<int> projective_cover_indices(const TruncatedModule& M);

struct CoverData {
    std::vector<int> indices; // peaks of the cover summands, with multiplicity
    TruncatedModule P;        // the projective sum
    std::vector<Mat> pi;      // pi[v-1]: P_v -> M_v, surjective
};

CoverData projective_cover(const TruncatedModule& M);

struct SyzygyData {
    TruncatedModule omega;       // kernel of the cover map; rank |U| - s
    std::vector<Mat> inclusion;  // inclusion[v-1]: omega_v -> P_v (kernel basis)
    CoverData cover;
};

SyzygyData syzygy_data(const TruncatedModule& M);
TruncatedModule syzygy(const TruncatedModule& M);

/// Hom(M, N) as a lattice of vertex-n matrices F_n (s_N x s_M); every hom
/// is determined by F_n via transfer around the circle. `codim` is the
/// F_p-codimension of the lattice inside all integral vertex-n matrices,
/// an invariant of the pair.
struct HomSpace {
    int source_rank = 0;
    int target_rank = 0;
    std::vector<Mat> basis;
    long long codim = 0;
};

HomSpace hom_space(const TruncatedModule& M, const TruncatedModule& N);

/// Expand a hom given at vertex n to its component at vertex v in [1, n].
Mat hom_component(const TruncatedModule& M, const TruncatedModule& N, const Mat& Fn, int v);

struct ExtData {
    long long dim = 0;               // dim over F_p of Ext^1(M, N)
    SyzygyData syz;                  // presentation used
    HomSpace hom_omega;              // Hom(Omega M, N)
    std::vector<std::vector<Ser>> class_gens; // coker generators, coords in hom_omega.basis
};

ExtData ext_computation(const TruncatedModule& M, const TruncatedModule& N);
long long ext1_dim(const TruncatedModule& M, const TruncatedModule& N);

/// Extension 0 -> L -> E -> M -> 0 with a seeded generic class; a zero
/// Ext group yields the direct sum.
TruncatedModule extend_generic(const TruncatedModule& M, const TruncatedModule& L,
                               SplitMix64& rng);

/// Build the filtered module of a profile by iterated generic extensions,
/// top row first. Deterministic given the seed.
TruncatedModule build_from_profile(const TruncatedRing& R, const Profile& P,
                                   std::uint64_t seed);

/// Monte-Carlo Fitting test on End(M)/t End(M): a sampled element whose
/// minimal polynomial has two coprime factors certifies a splitting; after
/// `trials` clean samples the module is reported indecomposable.
bool is_indecomposable(const TruncatedModule& M, int trials, std::uint64_t seed);

/// Invariant checks (rank, content, cover) give certain No; Yes requires a
/// sampled hom element that is invertible at every vertex.
bool are_isomorphic(const TruncatedModule& M, const TruncatedModule& N, int trials,
                    std::uint64_t seed);

enum class ModIncMode { subset, complement };

/// Matrix-level 1-increase at j: insert a vertex with Id/t*Id maps
/// (subset) or t*Id/Id maps (complement).
TruncatedModule increase_module(const TruncatedModule& M, int j, ModIncMode mode);

/// Matrix-level 1-decrease at j after normalizing x_j by base change.
/// subset needs x_j invertible (j in every filtration factor), complement
/// needs y_j invertible.
TruncatedModule decrease_module(const TruncatedModule& M, int j, ModIncMode mode);

/// Sorted t-valuation profile of the x-path from the anchor vertex n, per
/// vertex; a diagnostic view of the lattice diagram's column heights.
std::vector<std::vector<int>> dimension_lattice(const TruncatedModule& M);

} // namespace grasscat
