#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grasscat {

/// Truncated power-series ring F_p[t]/(t^N). Elements are coefficient
/// vectors of length N; all decisions made at valuations close to N are
/// guarded, since truncation junk lives there.
struct TruncatedRing {
    std::uint32_t p = 32003;
    int N = 64;

    TruncatedRing() = default;
    TruncatedRing(std::uint32_t p_, int N_) : p(p_), N(N_) {
        if (N < 2) throw std::invalid_argument("TruncatedRing: N too small");
    }

    bool operator==(const TruncatedRing&) const = default;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t inv(std::uint32_t a) const; // modular inverse, a != 0
};

/// Series element; coefficient i is the t^i coefficient.
using Ser = std::vector<std::uint32_t>;

Ser ser_zero(const TruncatedRing& R);
Ser ser_const(const TruncatedRing& R, long long c);
Ser ser_tpow(const TruncatedRing& R, int e, long long c = 1);

bool ser_is_zero(const Ser& a);
int ser_val(const TruncatedRing& R, const Ser& a); // N when a == 0

Ser ser_add(const TruncatedRing& R, const Ser& a, const Ser& b);
Ser ser_sub(const TruncatedRing& R, const Ser& a, const Ser& b);
Ser ser_neg(const TruncatedRing& R, const Ser& a);
Ser ser_mul(const TruncatedRing& R, const Ser& a, const Ser& b);
Ser ser_scale(const TruncatedRing& R, std::uint32_t c, const Ser& a);
/// Multiply by t^e (e >= 0), truncating.
Ser ser_shift_up(const TruncatedRing& R, const Ser& a, int e);
/// Exact division by t^e; the low coefficients must vanish.
Ser ser_shift_down(const TruncatedRing& R, const Ser& a, int e);
/// Inverse of a unit (valuation 0).
Ser ser_inv_unit(const TruncatedRing& R, const Ser& a);

/// Dense matrix over the truncated ring, row major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Ser> a;

    Mat() = default;
    Mat(const TruncatedRing& R, int r, int c)
        : rows(r), cols(c), a(static_cast<size_t>(r) * c, ser_zero(R)) {}

    Ser& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Ser& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Mat mat_identity(const TruncatedRing& R, int s);
Mat mat_scalar(const TruncatedRing& R, int s, const Ser& c);
Mat mat_mul(const TruncatedRing& R, const Mat& A, const Mat& B);
Mat mat_add(const TruncatedRing& R, const Mat& A, const Mat& B);
Mat mat_sub(const TruncatedRing& R, const Mat& A, const Mat& B);
bool mat_is_zero(const Mat& A);
Mat mat_hstack(const Mat& A, const Mat& B);
Mat mat_vstack(const Mat& A, const Mat& B);
Mat mat_submatrix(const Mat& A, int r0, int c0, int r, int c);

/// Determinant via valuation-pivoted elimination.
Ser mat_det(const TruncatedRing& R, const Mat& A);
int mat_det_val(const TruncatedRing& R, const Mat& A);

/// Adjugate (transpose cofactor matrix): A * adj(A) = det(A) * Id.
Mat mat_adjugate(const TruncatedRing& R, const Mat& A);

/// Matrix over F_p holding the t^0 coefficients.
std::vector<std::vector<std::uint32_t>> mat_mod_t(const Mat& A);
int fp_rank(const TruncatedRing& R, std::vector<std::vector<std::uint32_t>> m);

/// Smith normal form over the DVR: returns the sorted t-valuations of the
/// elementary divisors (N standing for a divisor that vanishes mod t^N).
/// When `right` is non-null it receives the unimodular W with U*A*W diagonal,
/// so solutions of A x = 0 (mod t^N) are W * {y : d_i y_i = 0}.
std::vector<int> smith_valuations(const TruncatedRing& R, Mat A, Mat* right = nullptr,
                                  Mat* left = nullptr);

/// Basis of the kernel lattice {x : A x = 0 over the DVR} for a matrix
/// whose kernel is expected to be saturated of rank `cols - rank`. Columns
/// of the result are the basis vectors.
Mat kernel_basis(const TruncatedRing& R, const Mat& A);

/// Solve A X = B exactly (A with full column rank over the fraction field).
/// Throws domain_error if no exact solution exists at working precision.
Mat solve_exact(const TruncatedRing& R, const Mat& A, const Mat& B);

/// Deterministic splitmix64 PRNG for seeded randomness.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// Uniform value in [1, p-1].
    std::uint32_t nonzero_mod(std::uint32_t p);
    /// Uniform value in [0, p-1].
    std::uint32_t mod(std::uint32_t p);
};

} // namespace grasscat
