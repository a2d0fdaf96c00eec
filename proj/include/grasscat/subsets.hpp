#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

namespace grasscat {

/// Thrown when an input is structurally valid but outside the domain of
/// an operation (mismatched (k,n), degenerate collapse, failed recovery, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A k-element subset of the cyclic index set [n] = {1,...,n}.
/// Elements are stored sorted ascending; indices are 1-based throughout,
/// with modular reduction mapping 0 to n.
struct KSubset {
    int n = 0;
    std::vector<int> elems;

    KSubset() = default;
    KSubset(int n_, std::vector<int> elements);

    int k() const { return static_cast<int>(elems.size()); }
    bool contains(int i) const;

    auto operator<=>(const KSubset&) const = default;
};

/// Reduce x into [1, n].
inline int mod1(long long x, int n) {
    long long r = (x - 1) % n;
    if (r < 0) r += n;
    return static_cast<int>(r + 1);
}

/// Complement [n] \ I.
KSubset complement(const KSubset& I);

/// Peaks of the rim of L_I: { i | i not in I, i+1 in I } (cyclically).
std::vector<int> peaks(const KSubset& I);

/// Valleys of the rim of L_I: { i | i in I, i+1 not in I }.
std::vector<int> valleys(const KSubset& I);

/// Number of maximal cyclic runs of I (equals the number of peaks).
int cyclic_interval_count(const KSubset& I);

/// Degree r if I \ J and J \ I strictly alternate in the linear order
/// (a1<b1<a2<... or b1<a1<b2<...), 0 if I == J, nullopt otherwise.
std::optional<int> interlacing_degree(const KSubset& I, const KSubset& J);

/// Add a (mod n) to every element and re-sort.
KSubset shift_subset(const KSubset& I, int a);

/// All k-subsets of [n], lexicographically sorted.
std::vector<KSubset> all_k_subsets(int k, int n);

} // namespace grasscat
