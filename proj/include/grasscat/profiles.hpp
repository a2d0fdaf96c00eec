#pragma once

#include "grasscat/subsets.hpp"

#include <string>

namespace grasscat {

/// Ordered list of k-subsets (rows). Row 1 is the top quotient factor,
/// the last row the submodule factor. Encodes a filtered module of rank m.
struct Profile {
    int n = 0;
    int k = 0;
    std::vector<KSubset> rows;

    Profile() = default;
    Profile(int n_, int k_, std::vector<KSubset> rows_);

    int rank() const { return static_cast<int>(rows.size()); }

    auto operator<=>(const Profile&) const = default;
};

/// Region between two consecutive close-packed rims, bounded by meeting
/// points. The arc is the half-open cyclic edge interval (arc_start, arc_end].
struct QuasiBox {
    int arc_start = 0; // meeting point opening the arc
    int arc_end = 0;   // meeting point closing the arc
    std::vector<int> arc_edges; // edge labels of the arc, in cyclic order
    int size = 0;   // |I ∩ arc| for the upper subset I
    int cosize = 0; // |I^c ∩ arc|
    bool is_box = false;
};

/// Vertical gap d(0..n) between the close-packed rims of L_I (upper) and
/// L_J (lower): d(j) = d(j-1) + [j in J] - [j in I], normalized so the
/// minimum over the cycle is 0. d[0] == d[n].
std::vector<int> rim_difference(const KSubset& I, const KSubset& J);

/// One QuasiBox per maximal cyclic arc between consecutive zeros of the
/// rim difference that contains positions with d > 0. A quasi-box is a box
/// (rectangle) iff within its arc the J-edges form a prefix block and the
/// I-edges form a suffix block.
std::vector<QuasiBox> quasi_boxes(const KSubset& I, const KSubset& J);

/// Remove I∩J and I^c∩J^c and relabel order-preservingly onto [n'].
/// Throws domain_error("degenerate collapse") when I == J.
std::pair<KSubset, KSubset> collapse(const KSubset& I, const KSubset& J);

/// Rotate the collapsed labels by a while keeping I∩J and I^c∩J^c fixed.
std::pair<KSubset, KSubset> a_shift(const KSubset& I, const KSubset& J, int a);

/// Multiset of all entries of the profile, as a sorted vector.
std::vector<int> content(const Profile& P);

/// x_i = number of rows containing i.
std::vector<long long> multiplicity_vector(const Profile& P);

bool is_weakly_column_decreasing(const Profile& P);
bool is_canonical(const Profile& P);
bool is_interlacing(const Profile& P); // every pair of rows interlacing

/// The m rotations of the row order, starting with P itself.
std::vector<Profile> cyclic_permutations(const Profile& P);

/// The canonical rotation of P, if one exists.
std::optional<Profile> canonical_rotation(const Profile& P);

/// shift_subset applied rowwise.
Profile profile_shift(const Profile& P, int a);

enum class IncMode { subset, complement };

/// Insert a new label j+1 into every row (subset) or into no row
/// (complement); labels > j are relabeled up by one. Target (k+1, n+1)
/// resp. (k, n+1).
Profile increase(const Profile& P, int j, IncMode mode);

/// Delete label j from all rows (subset; requires j in every row) or drop
/// the unused label j (complement; requires j in no row), relabeling down.
Profile decrease(const Profile& P, int j, IncMode mode);

/// Compact bar notation: rows joined by "|"; entries concatenated when
/// n <= 9, space-separated otherwise (e.g. "359|258|147|146").
std::string to_compact_string(const Profile& P);
std::string to_compact_string(const KSubset& I);

/// Parse the bar notation back into a profile over (k, n).
Profile profile_from_string(const std::string& s, int n);

} // namespace grasscat
