#pragma once

#include "grasscat/profiles.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace grasscat {

/// Exact rational with small operands; enough for the q-form's
/// k^2-denominators.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n_, long long d_ = 1);

    bool is_integer() const { return den == 1; }
    auto operator<=>(const Rational&) const = default;
};

Rational operator+(Rational a, Rational b);
Rational operator*(Rational a, Rational b);

/// A vector x in Z^n with the J_{k,n} quadratic form attached via k.
/// Membership in the root lattice Z^n(k) means k | sum(x).
struct RootVector {
    int n = 0;
    int k = 0;
    std::vector<long long> x;

    RootVector() = default;
    RootVector(int n_, int k_, std::vector<long long> x_);

    long long sum() const { return std::accumulate(x.begin(), x.end(), 0LL); }
    bool in_lattice() const { return sum() % k == 0; }

    auto operator<=>(const RootVector&) const = default;
};

/// Coefficients over the simple roots {beta, alpha_1..alpha_{n-1}}.
struct SimpleRootCoords {
    long long c_beta = 0;
    std::vector<long long> c; // c[i] = coefficient of alpha_{i+1}

    auto operator<=>(const SimpleRootCoords&) const = default;
};

enum class RootType { RealRoot, ImaginaryRoot, NotRoot };

std::string to_string(RootType t);

/// q(x) = sum x_i^2 + (2-k)/k^2 (sum x_i)^2.
Rational quad_form(const RootVector& v);

/// Polarization B(v,w) = sum v_i w_i + (2-k)/k^2 (sum v)(sum w).
Rational bilinear(const RootVector& v, const RootVector& w);

/// Generators are indexed 1..n: i in [n-1] is alpha_i, n is beta.
RootVector generator(int n, int k, int idx);

/// Integer pairing <v, alpha_idx^vee> = B(v, alpha_idx); requires v in Z^n(k).
long long pairing(const RootVector& v, int idx);

/// Simple reflection s_idx applied to v.
RootVector reflect(const RootVector& v, int idx);

/// Apply a reflection word; the rightmost letter acts first.
RootVector apply_word(const RootVector& v, const std::vector<int>& word);

SimpleRootCoords to_simple_coords(const RootVector& v);
RootVector from_simple_coords(int n, int k, const SimpleRootCoords& c);

/// Real / imaginary / not-a-root classification by reflection reduction
/// towards the fundamental region (smallest positive pairing index first).
RootType classify(const RootVector& v);

struct ProfileRootData {
    RootVector x;
    Rational q;
    RootType type = RootType::NotRoot;
    SimpleRootCoords coords;
};

ProfileRootData profile_root(const Profile& P);

/// "4β+2α1+5α2+...": zero terms skipped, unit coefficients implicit.
std::string format_simple_coords(const SimpleRootCoords& c);

} // namespace grasscat
