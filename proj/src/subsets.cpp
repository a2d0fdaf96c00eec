#include "grasscat/subsets.hpp"

#include <algorithm>

namespace grasscat {

KSubset::KSubset(int n_, std::vector<int> elements) : n(n_), elems(std::move(elements)) {
    if (n < 1) throw std::invalid_argument("KSubset: n must be positive");
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::invalid_argument("KSubset: elements must be distinct");
    if (!elems.empty() && (elems.front() < 1 || elems.back() > n))
        throw std::invalid_argument("KSubset: elements must lie in [1, n]");
    if (static_cast<int>(elems.size()) > n)
        throw std::invalid_argument("KSubset: more than n elements");
}

bool KSubset::contains(int i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

KSubset complement(const KSubset& I) {
    std::vector<int> out;
    out.reserve(I.n - I.k());
    for (int i = 1; i <= I.n; ++i)
        if (!I.contains(i)) out.push_back(i);
    return KSubset(I.n, std::move(out));
}

std::vector<int> peaks(const KSubset& I) {
    std::vector<int> out;
    for (int i = 1; i <= I.n; ++i)
        if (!I.contains(i) && I.contains(mod1(i + 1, I.n))) out.push_back(i);
    return out;
}

std::vector<int> valleys(const KSubset& I) {
    std::vector<int> out;
    for (int i = 1; i <= I.n; ++i)
        if (I.contains(i) && !I.contains(mod1(i + 1, I.n))) out.push_back(i);
    return out;
}

int cyclic_interval_count(const KSubset& I) {
    return static_cast<int>(peaks(I).size());
}

std::optional<int> interlacing_degree(const KSubset& I, const KSubset& J) {
    if (I.n != J.n || I.k() != J.k())
        throw domain_error("interlacing_degree: mismatched (k, n)");
    std::vector<int> a, b;
    std::set_difference(I.elems.begin(), I.elems.end(), J.elems.begin(), J.elems.end(),
                        std::back_inserter(a));
    std::set_difference(J.elems.begin(), J.elems.end(), I.elems.begin(), I.elems.end(),
                        std::back_inserter(b));
    const int r = static_cast<int>(a.size());
    if (r == 0) return 0;
    bool a_first = true, b_first = true;
    for (int i = 0; i < r; ++i) {
        // a1 < b1 < a2 < b2 < ...
        if (!(a[i] < b[i])) a_first = false;
        if (i + 1 < r && !(b[i] < a[i + 1])) a_first = false;
        // b1 < a1 < b2 < a2 < ...
        if (!(b[i] < a[i])) b_first = false;
        if (i + 1 < r && !(a[i] < b[i + 1])) b_first = false;
    }
    if (a_first || b_first) return r;
    return std::nullopt;
}

KSubset shift_subset(const KSubset& I, int a) {
    std::vector<int> out;
    out.reserve(I.k());
    for (int e : I.elems) out.push_back(mod1(static_cast<long long>(e) + a, I.n));
    return KSubset(I.n, std::move(out));
}

std::vector<KSubset> all_k_subsets(int k, int n) {
    std::vector<KSubset> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(n, cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace grasscat
