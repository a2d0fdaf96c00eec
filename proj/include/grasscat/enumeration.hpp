#pragma once

#include "grasscat/profiles.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace grasscat {

/// Numbers of partitions r = r1+r2+r3 (positive parts) with exactly
/// 1, 2, 3 distinct part values. Zero for r < 3.
std::array<long long, 3> partition_counts(int r);

/// Closed-form lower bound for the number of rank-2 rigid indecomposable
/// profiles: sum over r of (2r/3 p1 + 2r p2 + 4r p3) C(n,2r) C(n-2r,k-r).
long long n_kn(int k, int n);

/// Stream all ordered pairs I|J over (k,n) whose rims form exactly three
/// boxes. Returns the count; the sink may be null for count-only use.
long long enumerate_three_box_rank2(int k, int n,
                                    const std::function<void(const Profile&)>& sink);

std::vector<Profile> enumerate_three_box_rank2(int k, int n);

/// All m-row canonical profiles over (k,n) with q = 2, lexicographically
/// sorted by rows.
std::vector<Profile> enumerate_canonical_real(int k, int n, int m);

struct ImaginaryRank3 {
    Profile profile;
    int pattern = 0;        // 1..12, the order of the classification list
    bool rigid_pattern = false; // patterns 1..9 (shifts of 157|369|248 at n=9)
};

/// Instantiate the twelve rank-3 imaginary patterns over all strictly
/// increasing 9-tuples from [n]. Empty for n < 9.
std::vector<ImaginaryRank3> enumerate_imaginary_rank3(int n);

long long binomial(int n, int k);

} // namespace grasscat
