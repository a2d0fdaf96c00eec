#pragma once

#include "grasscat/oracle.hpp"
#include "grasscat/roots.hpp"

namespace grasscat {

/// One tau-orbit of profiles, walked by iterating the inverse translate.
struct TubeRow {
    std::vector<Profile> entries;
    int period = 0; // 0 when the walk did not close within max_steps
};

struct RecoveryOptions {
    std::uint32_t prime = 32003;
    int truncation = 0;              // 0: default_truncation(n)
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    int iso_trials = 50;
    bool allow_unique_unverified = true; // accept a unique filter survivor
};

struct RecoveryResult {
    Profile profile;
    bool iso_verified = false;
};

/// tau^{-1} L_I = L_J for I = {i} u {j,...,j+k-2} (two cyclic intervals,
/// one of them a singleton): J = {i+1,...,i+k-1, j+k-1}.
Profile tau_inverse_rank1_two_intervals(const KSubset& I);

struct ArStart {
    KSubset X, Y;     // tau^{-1} L_I = L_X | L_Y
    Profile end_term; // X|Y
    Profile middle;   // X|I|Y, the middle profile when it is indecomposable
};

/// AR sequence L_I -> M -> L_X|L_Y for a 3-subset I with three peaks (k=3):
/// X = I+1, Y = I+2.
ArStart ar_sequence_start(const KSubset& I);

struct ArSplit {
    KSubset summand;  // the rank-1 direct summand L_A of the middle term
    Profile rest;     // the complementary indecomposable
};

/// Splitting of the AR middle term for I = {i,i+2,i+4}; requires n >= 7.
/// direction=false: sequence starting at L_I; true: the dual, ending at L_I.
ArSplit ar_split_rule(int n, int i, bool dual);

/// Profile of tau^{-1}(M) by the candidate-then-verify strategy: build M
/// generically, take the syzygy, and match content/cover/isomorphism
/// against freshly built candidate profiles.
RecoveryResult tau_inverse_profile(const Profile& P, const RecoveryOptions& opt = {});

/// Iterate tau^{-1} from P until the starting profile recurs.
TubeRow tube_walk(const Profile& P, int max_steps = 64, const RecoveryOptions& opt = {});

struct CensusEntry {
    Profile profile;
    Rational q;
    RootType type = RootType::NotRoot;
    std::string orbit; // shift-orbit label (lex-min profile among shifts)
};

/// The 225 rigid indecomposable rank-3 profiles of (3,9): the 216 cyclic
/// permutations of the canonical real profiles plus the 9 shifts of
/// 157|369|248. Verifies distinctness and the 216/9 classification split.
std::vector<CensusEntry> census_39();

} // namespace grasscat
