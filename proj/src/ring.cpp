#include "grasscat/ring.hpp"

#include "grasscat/subsets.hpp" // domain_error

#include <algorithm>

namespace grasscat {

std::uint32_t TruncatedRing::inv(std::uint32_t a) const {
    // extended Euclid
    long long t0 = 0, t1 = 1, r0 = p, r1 = a % p;
    while (r1 != 0) {
        const long long q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    if (r0 != 1) throw domain_error("TruncatedRing::inv: not invertible");
    if (t0 < 0) t0 += p;
    return static_cast<std::uint32_t>(t0);
}

Ser ser_zero(const TruncatedRing& R) { return Ser(static_cast<size_t>(R.N), 0); }

Ser ser_const(const TruncatedRing& R, long long c) {
    Ser out = ser_zero(R);
    long long m = c % static_cast<long long>(R.p);
    if (m < 0) m += R.p;
    out[0] = static_cast<std::uint32_t>(m);
    return out;
}

Ser ser_tpow(const TruncatedRing& R, int e, long long c) {
    Ser out = ser_zero(R);
    if (e < R.N) {
        long long m = c % static_cast<long long>(R.p);
        if (m < 0) m += R.p;
        out[static_cast<size_t>(e)] = static_cast<std::uint32_t>(m);
    }
    return out;
}

bool ser_is_zero(const Ser& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

int ser_val(const TruncatedRing& R, const Ser& a) {
    for (int i = 0; i < R.N; ++i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return R.N;
}

Ser ser_add(const TruncatedRing& R, const Ser& a, const Ser& b) {
    Ser out(a);
    for (int i = 0; i < R.N; ++i) out[i] = R.add(out[i], b[i]);
    return out;
}

Ser ser_sub(const TruncatedRing& R, const Ser& a, const Ser& b) {
    Ser out(a);
    for (int i = 0; i < R.N; ++i) out[i] = R.sub(out[i], b[i]);
    return out;
}

Ser ser_neg(const TruncatedRing& R, const Ser& a) {
    Ser out(a);
    for (int i = 0; i < R.N; ++i) out[i] = out[i] ? R.p - out[i] : 0;
    return out;
}

Ser ser_mul(const TruncatedRing& R, const Ser& a, const Ser& b) {
    Ser out = ser_zero(R);
    const int va = ser_val(R, a);
    if (va == R.N) return out;
    const int vb = ser_val(R, b);
    if (vb == R.N) return out;
    for (int i = va; i < R.N; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        const int jmax = R.N - i;
        for (int j = vb; j < jmax; ++j) {
            if (b[j] == 0) continue;
            std::uint32_t& o = out[i + j];
            o = static_cast<std::uint32_t>((o + ai * b[j]) % R.p);
        }
    }
    return out;
}

Ser ser_scale(const TruncatedRing& R, std::uint32_t c, const Ser& a) {
    Ser out(a);
    for (int i = 0; i < R.N; ++i) out[i] = R.mul(out[i], c);
    return out;
}

Ser ser_shift_up(const TruncatedRing& R, const Ser& a, int e) {
    Ser out = ser_zero(R);
    for (int i = 0; i + e < R.N; ++i) out[i + e] = a[i];
    return out;
}

Ser ser_shift_down(const TruncatedRing& R, const Ser& a, int e) {
    for (int i = 0; i < e && i < R.N; ++i)
        if (a[i] != 0) throw domain_error("ser_shift_down: inexact division by t^e");
    Ser out = ser_zero(R);
    for (int i = e; i < R.N; ++i) out[i - e] = a[i];
    return out;
}

Ser ser_inv_unit(const TruncatedRing& R, const Ser& a) {
    if (a[0] == 0) throw domain_error("ser_inv_unit: not a unit");
    Ser out = ser_zero(R);
    const std::uint32_t a0inv = R.inv(a[0]);
    out[0] = a0inv;
    for (int m = 1; m < R.N; ++m) {
        std::uint64_t acc = 0;
        for (int i = 1; i <= m; ++i) acc = (acc + static_cast<std::uint64_t>(a[i]) * out[m - i]) % R.p;
        out[m] = R.mul(a0inv, acc ? R.p - static_cast<std::uint32_t>(acc) : 0);
    }
    return out;
}

Mat mat_identity(const TruncatedRing& R, int s) {
    Mat out(R, s, s);
    for (int i = 0; i < s; ++i) out.at(i, i) = ser_const(R, 1);
    return out;
}

Mat mat_scalar(const TruncatedRing& R, int s, const Ser& c) {
    Mat out(R, s, s);
    for (int i = 0; i < s; ++i) out.at(i, i) = c;
    return out;
}

Mat mat_mul(const TruncatedRing& R, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(R, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int l = 0; l < A.cols; ++l) {
            const Ser& ail = A.at(i, l);
            if (ser_is_zero(ail)) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Ser& blj = B.at(l, j);
                if (ser_is_zero(blj)) continue;
                out.at(i, j) = ser_add(R, out.at(i, j), ser_mul(R, ail, blj));
            }
        }
    return out;
}

Mat mat_add(const TruncatedRing& R, const Mat& A, const Mat& B) {
    Mat out = A;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = ser_add(R, out.a[i], B.a[i]);
    return out;
}

Mat mat_sub(const TruncatedRing& R, const Mat& A, const Mat& B) {
    Mat out = A;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = ser_sub(R, out.a[i], B.a[i]);
    return out;
}

bool mat_is_zero(const Mat& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](const Ser& s) { return ser_is_zero(s); });
}

Mat mat_hstack(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw std::invalid_argument("mat_hstack: shape mismatch");
    Mat out;
    out.rows = A.rows;
    out.cols = A.cols + B.cols;
    out.a.reserve(static_cast<size_t>(out.rows) * out.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) out.a.push_back(A.at(i, j));
        for (int j = 0; j < B.cols; ++j) out.a.push_back(B.at(i, j));
    }
    return out;
}

Mat mat_vstack(const Mat& A, const Mat& B) {
    if (A.cols != B.cols) throw std::invalid_argument("mat_vstack: shape mismatch");
    Mat out = A;
    out.rows = A.rows + B.rows;
    out.a.insert(out.a.end(), B.a.begin(), B.a.end());
    return out;
}

Mat mat_submatrix(const Mat& A, int r0, int c0, int r, int c) {
    Mat out;
    out.rows = r;
    out.cols = c;
    out.a.reserve(static_cast<size_t>(r) * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out.a.push_back(A.at(r0 + i, c0 + j));
    return out;
}

Ser mat_det(const TruncatedRing& R, const Mat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("mat_det: not square");
    Mat M = A;
    const int s = A.rows;
    Ser det = ser_const(R, 1);
    bool negate = false;
    for (int k = 0; k < s; ++k) {
        int pr = -1, pc = -1, best = R.N;
        for (int i = k; i < s; ++i)
            for (int j = k; j < s; ++j) {
                const int v = ser_val(R, M.at(i, j));
                if (v < best) { best = v; pr = i; pc = j; }
            }
        if (pr < 0) return ser_zero(R);
        if (pr != k) {
            for (int j = 0; j < s; ++j) std::swap(M.at(k, j), M.at(pr, j));
            negate = !negate;
        }
        if (pc != k) {
            for (int i = 0; i < s; ++i) std::swap(M.at(i, k), M.at(i, pc));
            negate = !negate;
        }
        const Ser& piv = M.at(k, k);
        det = ser_mul(R, det, piv);
        const Ser unit_inv = ser_inv_unit(R, ser_shift_down(R, piv, best));
        for (int i = k + 1; i < s; ++i) {
            const Ser& e = M.at(i, k);
            if (ser_is_zero(e)) continue;
            const Ser q = ser_mul(R, ser_shift_down(R, e, best), unit_inv);
            for (int j = k; j < s; ++j)
                M.at(i, j) = ser_sub(R, M.at(i, j), ser_mul(R, q, M.at(k, j)));
        }
    }
    return negate ? ser_neg(R, det) : det;
}

int mat_det_val(const TruncatedRing& R, const Mat& A) {
    return ser_val(R, mat_det(R, A));
}

Mat mat_adjugate(const TruncatedRing& R, const Mat& A) {
    const int s = A.rows;
    Mat out(R, s, s);
    if (s == 1) {
        out.at(0, 0) = ser_const(R, 1);
        return out;
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            Mat minor(R, s - 1, s - 1);
            for (int r = 0, rr = 0; r < s; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < s; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = A.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Ser cof = mat_det(R, minor);
            if ((i + j) % 2 == 1) cof = ser_neg(R, cof);
            out.at(j, i) = std::move(cof);
        }
    return out;
}

std::vector<std::vector<std::uint32_t>> mat_mod_t(const Mat& A) {
    std::vector<std::vector<std::uint32_t>> out(A.rows, std::vector<std::uint32_t>(A.cols));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) out[i][j] = A.at(i, j)[0];
    return out;
}

int fp_rank(const TruncatedRing& R, std::vector<std::vector<std::uint32_t>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        const std::uint32_t inv = R.inv(m[rank][c]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const std::uint32_t f = R.mul(m[i][c], inv);
            for (int j = c; j < cols; ++j) m[i][j] = R.sub(m[i][j], R.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<int> smith_valuations(const TruncatedRing& R, Mat A, Mat* right, Mat* left) {
    const int m = A.rows, q = A.cols;
    if (right) *right = mat_identity(R, q);
    if (left) *left = mat_identity(R, m);
    const int steps = std::min(m, q);
    std::vector<int> divisors(static_cast<size_t>(steps), R.N);
    for (int k = 0; k < steps; ++k) {
        int pr = -1, pc = -1, best = R.N;
        for (int i = k; i < m; ++i)
            for (int j = k; j < q; ++j) {
                const int v = ser_val(R, A.at(i, j));
                if (v < best) { best = v; pr = i; pc = j; }
            }
        if (pr < 0) break; // remaining block vanishes mod t^N
        if (pr != k) {
            for (int j = 0; j < q; ++j) std::swap(A.at(k, j), A.at(pr, j));
            if (left)
                for (int j = 0; j < m; ++j) std::swap(left->at(k, j), left->at(pr, j));
        }
        if (pc != k) {
            for (int i = 0; i < m; ++i) std::swap(A.at(i, k), A.at(i, pc));
            if (right)
                for (int i = 0; i < q; ++i) std::swap(right->at(i, k), right->at(i, pc));
        }
        // normalize the pivot to exactly t^best
        const Ser unit_inv = ser_inv_unit(R, ser_shift_down(R, A.at(k, k), best));
        for (int j = k; j < q; ++j) A.at(k, j) = ser_mul(R, A.at(k, j), unit_inv);
        A.at(k, k) = ser_tpow(R, best);
        if (left)
            for (int j = 0; j < m; ++j) left->at(k, j) = ser_mul(R, left->at(k, j), unit_inv);
        for (int i = k + 1; i < m; ++i) {
            const Ser& e = A.at(i, k);
            if (ser_is_zero(e)) continue;
            const Ser f = ser_shift_down(R, e, best); // row_i -= f * t^best-row... f = e / t^best
            for (int j = k; j < q; ++j)
                A.at(i, j) = ser_sub(R, A.at(i, j), ser_mul(R, f, A.at(k, j)));
            if (left)
                for (int j = 0; j < m; ++j)
                    left->at(i, j) = ser_sub(R, left->at(i, j), ser_mul(R, f, left->at(k, j)));
        }
        for (int j = k + 1; j < q; ++j) {
            const Ser& e = A.at(k, j);
            if (ser_is_zero(e)) continue;
            const Ser f = ser_shift_down(R, e, best);
            for (int i = k; i < m; ++i)
                A.at(i, j) = ser_sub(R, A.at(i, j), ser_mul(R, f, A.at(i, k)));
            if (right)
                for (int i = 0; i < q; ++i)
                    right->at(i, j) = ser_sub(R, right->at(i, j), ser_mul(R, f, right->at(i, k)));
        }
        divisors[static_cast<size_t>(k)] = best;
    }
    return divisors;
}

Mat kernel_basis(const TruncatedRing& R, const Mat& A) {
    const int m = A.rows, q = A.cols;
    Mat M = A;
    Mat W = mat_identity(R, q);
    std::vector<char> prow(static_cast<size_t>(m), 0), pcol(static_cast<size_t>(q), 0);
    while (true) {
        int pr = -1, pc = -1, best = R.N;
        for (int i = 0; i < m; ++i) {
            if (prow[i]) continue;
            for (int j = 0; j < q; ++j) {
                if (pcol[j]) continue;
                const int v = ser_val(R, M.at(i, j));
                if (v < best) { best = v; pr = i; pc = j; }
            }
        }
        if (pr < 0) break;
        if (best > R.N / 2)
            throw domain_error("kernel_basis: precision exhausted, increase N");
        prow[pr] = 1;
        pcol[pc] = 1;
        const Ser unit_inv = ser_inv_unit(R, ser_shift_down(R, M.at(pr, pc), best));
        for (int j = 0; j < q; ++j) {
            if (j == pc || pcol[j]) continue;
            const Ser& e = M.at(pr, j);
            if (ser_is_zero(e)) continue;
            const Ser f = ser_mul(R, ser_shift_down(R, e, best), unit_inv);
            for (int i = 0; i < m; ++i)
                M.at(i, j) = ser_sub(R, M.at(i, j), ser_mul(R, f, M.at(i, pc)));
            for (int i = 0; i < q; ++i)
                W.at(i, j) = ser_sub(R, W.at(i, j), ser_mul(R, f, W.at(i, pc)));
        }
    }
    int dim = 0;
    for (int j = 0; j < q; ++j)
        if (!pcol[j]) ++dim;
    Mat out(R, q, dim);
    int c = 0;
    for (int j = 0; j < q; ++j) {
        if (pcol[j]) continue;
        for (int i = 0; i < q; ++i) out.at(i, c) = W.at(i, j);
        ++c;
    }
    return out;
}

Mat solve_exact(const TruncatedRing& R, const Mat& A, const Mat& B) {
    Mat W, U;
    const auto div = smith_valuations(R, A, &W, &U);
    const Mat UB = mat_mul(R, U, B);
    const int rank_needed = A.cols;
    Mat Y(R, A.cols, B.cols);
    for (int i = 0; i < std::min(A.rows, A.cols); ++i) {
        const int d = div[static_cast<size_t>(i)];
        if (d >= R.N) {
            if (i < rank_needed) throw domain_error("solve_exact: rank deficient");
            continue;
        }
        if (d > R.N / 2) throw domain_error("solve_exact: precision exhausted, increase N");
        for (int j = 0; j < B.cols; ++j) Y.at(i, j) = ser_shift_down(R, UB.at(i, j), d);
    }
    for (int i = A.cols; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (!ser_is_zero(UB.at(i, j)))
                throw domain_error("solve_exact: inconsistent system");
    return mat_mul(R, W, Y);
}

std::uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint32_t SplitMix64::nonzero_mod(std::uint32_t p) {
    return 1 + static_cast<std::uint32_t>(next() % (p - 1));
}

std::uint32_t SplitMix64::mod(std::uint32_t p) {
    return static_cast<std::uint32_t>(next() % p);
}

} // namespace grasscat
