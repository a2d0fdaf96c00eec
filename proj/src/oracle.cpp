#include "grasscat/oracle.hpp"

#include <algorithm>
#include <map>

namespace grasscat {

namespace {

bool ser_eq_upto(const Ser& a, const Ser& b, int upto) {
    for (int i = 0; i < upto && i < static_cast<int>(a.size()); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool mat_eq_upto(const Mat& A, const Mat& B, int upto) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (!ser_eq_upto(A.a[i], B.a[i], upto)) return false;
    return true;
}

// x-path X_v ... X_1 per vertex v = 1..n.
std::vector<Mat> x_paths(const TruncatedModule& M) {
    std::vector<Mat> out;
    out.reserve(M.n);
    Mat acc = mat_identity(M.ring, M.s);
    for (int v = 1; v <= M.n; ++v) {
        acc = mat_mul(M.ring, M.X[v - 1], acc);
        out.push_back(acc);
    }
    return out;
}

} // namespace

int default_truncation(int n) { return 6 * n; }

TruncatedModule build_rank1(const TruncatedRing& R, const KSubset& I) {
    TruncatedModule M;
    M.ring = R;
    M.n = I.n;
    M.k = I.k();
    M.s = 1;
    M.prec = R.N;
    const Ser one = ser_const(R, 1), t = ser_tpow(R, 1);
    for (int j = 1; j <= M.n; ++j) {
        Mat x(R, 1, 1), y(R, 1, 1);
        x.at(0, 0) = I.contains(j) ? one : t;
        y.at(0, 0) = I.contains(j) ? t : one;
        M.X.push_back(std::move(x));
        M.Y.push_back(std::move(y));
    }
    return M;
}

TruncatedModule build_projective(const TruncatedRing& R, int n, int k, int j) {
    std::vector<int> elems;
    for (int i = 1; i <= k; ++i) elems.push_back(mod1(j + i, n));
    return build_rank1(R, KSubset(n, std::move(elems)));
}

void assert_relations(const TruncatedModule& M) {
    if (M.empty()) return;
    const auto& R = M.ring;
    const int upto = std::min(M.prec, R.N);
    const Mat tid = mat_scalar(R, M.s, ser_tpow(R, 1));
    for (int v = 1; v <= M.n; ++v) {
        if (!mat_eq_upto(mat_mul(R, M.X[v - 1], M.Y[v - 1]), tid, upto) ||
            !mat_eq_upto(mat_mul(R, M.Y[v - 1], M.X[v - 1]), tid, upto))
            throw domain_error("module relations violated: xy = yx = t");
    }
    Mat circle = mat_identity(R, M.s);
    for (int v = 1; v <= M.n; ++v) circle = mat_mul(R, M.X[v - 1], circle);
    if (!mat_eq_upto(circle, mat_scalar(R, M.s, ser_tpow(R, M.n - M.k)), upto))
        throw domain_error("module relations violated: x-circle = t^(n-k)");
}

std::vector<long long> content_vector(const TruncatedModule& M) {
    std::vector<long long> x(M.n, 0);
    for (int j = 1; j <= M.n; ++j)
        x[j - 1] = M.s - mat_det_val(M.ring, M.X[j - 1]);
    return x;
}

namespace {

// F_p column echelon keeping track of which standard vectors extend the span.
struct FpSpan {
    const TruncatedRing& R;
    std::vector<std::vector<std::uint32_t>> rows; // reduced row-echelon rows
    explicit FpSpan(const TruncatedRing& R_) : R(R_) {}

    bool add(std::vector<std::uint32_t> v) {
        for (const auto& r : rows) {
            int lead = -1;
            for (size_t i = 0; i < r.size(); ++i)
                if (r[i] != 0) { lead = static_cast<int>(i); break; }
            if (lead >= 0 && v[lead] != 0) {
                const std::uint32_t f = R.mul(v[lead], R.inv(r[lead]));
                for (size_t i = 0; i < v.size(); ++i) v[i] = R.sub(v[i], R.mul(f, r[i]));
            }
        }
        if (std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; }))
            return false;
        rows.push_back(std::move(v));
        return true;
    }
};

} // namespace

CoverData projective_cover(const TruncatedModule& M) {
    const auto& R = M.ring;
    CoverData out;
    std::vector<std::pair<int, std::vector<std::uint32_t>>> summands; // (peak j, lift)
    for (int j = 1; j <= M.n; ++j) {
        const Mat z = mat_hstack(M.X[j - 1], M.Y[j % M.n]);
        FpSpan span(R);
        const auto zc = mat_mod_t(z);
        for (int c = 0; c < z.cols; ++c) {
            std::vector<std::uint32_t> col(M.s);
            for (int r = 0; r < M.s; ++r) col[r] = zc[r][c];
            span.add(std::move(col));
        }
        for (int r = 0; r < M.s; ++r) {
            std::vector<std::uint32_t> e(M.s, 0);
            e[r] = 1;
            if (span.add(std::move(e))) {
                summands.emplace_back(j, std::vector<std::uint32_t>{});
                summands.back().second.assign(M.s, 0);
                summands.back().second[r] = 1;
            }
        }
    }
    const int u = static_cast<int>(summands.size());
    // assemble P = ⊕ P_j
    TruncatedModule P;
    P.ring = R;
    P.n = M.n;
    P.k = M.k;
    P.s = u;
    P.prec = R.N;
    for (int v = 1; v <= M.n; ++v) {
        Mat x(R, u, u), y(R, u, u);
        for (int l = 0; l < u; ++l) {
            const int j = summands[l].first;
            const bool in = [&] {
                for (int i = 1; i <= M.k; ++i)
                    if (mod1(j + i, M.n) == v) return true;
                return false;
            }();
            x.at(l, l) = in ? ser_const(R, 1) : ser_tpow(R, 1);
            y.at(l, l) = in ? ser_tpow(R, 1) : ser_const(R, 1);
        }
        P.X.push_back(std::move(x));
        P.Y.push_back(std::move(y));
    }
    // cover map columns: push each lift along the rim of its summand
    std::vector<Mat> pi(M.n, Mat(R, M.s, u));
    for (int l = 0; l < u; ++l) {
        const int j = summands[l].first;
        Mat vec(R, M.s, 1);
        for (int r = 0; r < M.s; ++r) vec.at(r, 0) = ser_const(R, summands[l].second[r]);
        // vertex j and the x-side j+1..j+k
        Mat cur = vec;
        for (int d = 0; d <= M.k; ++d) {
            const int v = mod1(j + d, M.n);
            if (d > 0) cur = mat_mul(R, M.X[v - 1], cur);
            for (int r = 0; r < M.s; ++r) pi[v - 1].at(r, l) = cur.at(r, 0);
        }
        // y-side j-1 down to j+k+1
        cur = vec;
        for (int d = 1; d <= M.n - M.k - 1; ++d) {
            const int v = mod1(j - d, M.n);
            cur = mat_mul(R, M.Y[mod1(v + 1, M.n) - 1], cur);
            for (int r = 0; r < M.s; ++r) pi[v - 1].at(r, l) = cur.at(r, 0);
        }
    }
    out.P = std::move(P);
    out.pi = std::move(pi);
    for (const auto& [j, lift] : summands) out.indices.push_back(j);
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

std::vector<int> projective_cover_indices(const TruncatedModule& M) {
    return projective_cover(M).indices;
}

SyzygyData syzygy_data(const TruncatedModule& M) {
    const auto& R = M.ring;
    SyzygyData out;
    out.cover = projective_cover(M);
    const int u = out.cover.P.s;
    const int r = u - M.s;
    out.omega.ring = R;
    out.omega.n = M.n;
    out.omega.k = M.k;
    out.omega.s = r;
    if (r == 0) {
        out.omega.prec = R.N;
        return out; // M projective, trivial syzygy
    }
    for (int v = 1; v <= M.n; ++v) {
        Mat B = kernel_basis(R, out.cover.pi[v - 1]);
        if (B.cols != r) throw domain_error("syzygy: unexpected kernel rank");
        out.inclusion.push_back(std::move(B));
    }
    for (int v = 1; v <= M.n; ++v) {
        const Mat& Bv = out.inclusion[v - 1];
        const Mat& Bprev = out.inclusion[(v + M.n - 2) % M.n];
        out.omega.X.push_back(
            solve_exact(R, Bv, mat_mul(R, out.cover.P.X[v - 1], Bprev)));
        out.omega.Y.push_back(
            solve_exact(R, Bprev, mat_mul(R, out.cover.P.Y[v - 1], Bv)));
    }
    // kernel extraction and solves divide by at most the largest divisor of
    // the cover map, bounded by the path valuations
    out.omega.prec = M.prec - (M.n - M.k);
    assert_relations(out.omega);
    return out;
}

TruncatedModule syzygy(const TruncatedModule& M) { return syzygy_data(M).omega; }

HomSpace hom_space(const TruncatedModule& M, const TruncatedModule& N) {
    const auto& R = M.ring;
    if (M.n != N.n || M.k != N.k || !(M.ring == N.ring))
        throw domain_error("hom_space: mismatched modules");
    HomSpace out;
    out.source_rank = M.s;
    out.target_rank = N.s;
    const int q = M.s * N.s;
    if (q == 0) return out;
    const auto pathM = x_paths(M);
    const auto pathN = x_paths(N);
    int e_max = 0;
    std::vector<int> evals(M.n, 0);
    for (int v = 1; v < M.n; ++v) {
        evals[v - 1] = mat_det_val(R, pathM[v - 1]);
        e_max = std::max(e_max, evals[v - 1]);
    }
    if (e_max >= R.N / 2)
        throw domain_error("hom_space: path valuation too large, increase N");
    // congruence rows: t^(N-e_v) * L_v U adj(R_v) = 0 in R_N, unknowns U
    int nrows = 0;
    for (int v = 1; v < M.n; ++v)
        if (evals[v - 1] > 0) nrows += q;
    Mat C(R, std::max(nrows, 1), q);
    int row = 0;
    for (int v = 1; v < M.n; ++v) {
        const int e = evals[v - 1];
        if (e == 0) continue;
        const Mat adjR = mat_adjugate(R, pathM[v - 1]);
        const Mat& L = pathN[v - 1];
        for (int a = 0; a < N.s; ++a)
            for (int b = 0; b < M.s; ++b) {
                for (int c = 0; c < N.s; ++c)
                    for (int d = 0; d < M.s; ++d) {
                        const Ser prod = ser_mul(R, L.at(a, c), adjR.at(d, b));
                        C.at(row, c * M.s + d) = ser_shift_up(R, prod, R.N - e);
                    }
                ++row;
            }
    }
    Mat W;
    const auto div = smith_valuations(R, C, &W);
    std::vector<int> g(q, 0);
    for (int i = 0; i < std::min<int>(static_cast<int>(div.size()), q); ++i)
        g[i] = std::max(0, R.N - div[i]);
    for (int i = 0; i < q; ++i) {
        if (g[i] > e_max)
            throw domain_error("hom_space: precision exhausted, increase N");
        Mat F(R, N.s, M.s);
        for (int c = 0; c < N.s; ++c)
            for (int d = 0; d < M.s; ++d)
                F.at(c, d) = ser_shift_up(R, W.at(c * M.s + d, i), g[i]);
        out.basis.push_back(std::move(F));
        out.codim += g[i];
    }
    return out;
}

Mat hom_component(const TruncatedModule& M, const TruncatedModule& N, const Mat& Fn, int v) {
    const auto& R = M.ring;
    if (v == M.n) return Fn;
    Mat pm = mat_identity(R, M.s), pn = mat_identity(R, N.s);
    for (int i = 1; i <= v; ++i) {
        pm = mat_mul(R, M.X[i - 1], pm);
        pn = mat_mul(R, N.X[i - 1], pn);
    }
    const Ser det = mat_det(R, pm);
    const int e = ser_val(R, det);
    const Ser unit_inv = ser_inv_unit(R, ser_shift_down(R, det, e));
    Mat num = mat_mul(R, mat_mul(R, pn, Fn), mat_adjugate(R, pm));
    for (auto& entry : num.a) entry = ser_mul(R, ser_shift_down(R, entry, e), unit_inv);
    return num;
}

ExtData ext_computation(const TruncatedModule& M, const TruncatedModule& N) {
    const auto& R = M.ring;
    ExtData out;
    out.syz = syzygy_data(M);
    const TruncatedModule& Om = out.syz.omega;
    if (Om.empty()) return out; // projective M
    out.hom_omega = hom_space(Om, N);
    const int q = N.s * Om.s;
    if (static_cast<int>(out.hom_omega.basis.size()) != q)
        throw domain_error("ext: hom basis size mismatch");
    Mat G(R, q, q);
    for (int i = 0; i < q; ++i)
        for (int a = 0; a < N.s; ++a)
            for (int d = 0; d < Om.s; ++d)
                G.at(a * Om.s + d, i) = out.hom_omega.basis[i].at(a, d);
    // Hom(P, N) generators: per cover summand l and basis vector b of N_{j_l}
    const int u = out.syz.cover.P.s;
    const auto& Bn = out.syz.inclusion[M.n - 1];
    Mat rhs(R, q, u * N.s);
    for (int l = 0; l < u; ++l) {
        const int j = out.syz.cover.indices[l];
        // path of N from vertex j to vertex n (x-side if short, else y-side)
        Mat path = mat_identity(R, N.s);
        const int dist_right = (M.n - j) % M.n;
        if (dist_right <= M.k) {
            for (int d = 1; d <= dist_right; ++d)
                path = mat_mul(R, N.X[mod1(j + d, M.n) - 1], path);
        } else {
            for (int d = 0; d < j; ++d)
                path = mat_mul(R, N.Y[j - 1 - d], path);
        }
        for (int b = 0; b < N.s; ++b) {
            // restricted hom at vertex n: outer product (path e_b) x (row l of Bn)
            for (int a = 0; a < N.s; ++a)
                for (int d = 0; d < Om.s; ++d)
                    rhs.at(a * Om.s + d, l * N.s + b) =
                        ser_mul(R, path.at(a, b), Bn.at(l, d));
        }
    }
    Mat rho = solve_exact(R, G, rhs);
    Mat Uleft;
    const auto div = smith_valuations(R, rho, nullptr, &Uleft);
    std::vector<int> torsion;
    for (int i = 0; i < std::min<int>(static_cast<int>(div.size()), q); ++i) {
        const int h = div[i];
        if (h == 0) continue;
        if (h > R.N / 4)
            throw domain_error("ext: precision exhausted, increase N");
        out.dim += h;
        torsion.push_back(i);
    }
    if (static_cast<int>(div.size()) < q)
        throw domain_error("ext: cokernel has free part");
    if (!torsion.empty()) {
        Mat sel(R, q, static_cast<int>(torsion.size()));
        for (size_t c = 0; c < torsion.size(); ++c)
            sel.at(torsion[c], static_cast<int>(c)) = ser_const(R, 1);
        const Mat gens = solve_exact(R, Uleft, sel);
        for (size_t c = 0; c < torsion.size(); ++c) {
            std::vector<Ser> coords;
            for (int i = 0; i < q; ++i) coords.push_back(gens.at(i, static_cast<int>(c)));
            out.class_gens.push_back(std::move(coords));
        }
    }
    return out;
}

long long ext1_dim(const TruncatedModule& M, const TruncatedModule& N) {
    return ext_computation(M, N).dim;
}

TruncatedModule extend_generic(const TruncatedModule& M, const TruncatedModule& L,
                               SplitMix64& rng) {
    const auto& R = M.ring;
    ExtData ext = ext_computation(M, L);
    const TruncatedModule& Om = ext.syz.omega;
    const int u = ext.syz.cover.P.s;
    const int r = Om.s;
    const int q = L.s * r;
    // generic class: nonzero scalar per cokernel generator
    std::vector<Ser> coords(static_cast<size_t>(q), ser_zero(R));
    for (const auto& gen : ext.class_gens) {
        const std::uint32_t c = rng.nonzero_mod(R.p);
        for (int i = 0; i < q; ++i)
            coords[i] = ser_add(R, coords[i], ser_scale(R, c, gen[i]));
    }
    Mat hN(R, L.s, r);
    for (int i = 0; i < q; ++i) {
        if (ser_is_zero(coords[i])) continue;
        for (int a = 0; a < L.s; ++a)
            for (int d = 0; d < r; ++d)
                hN.at(a, d) = ser_add(R, hN.at(a, d),
                                      ser_mul(R, coords[i], ext.hom_omega.basis[i].at(a, d)));
    }
    // pushout of 0 -> Omega -> P -> M -> 0 along -h
    TruncatedModule E;
    E.ring = R;
    E.n = M.n;
    E.k = M.k;
    E.s = u + L.s - r;
    if (E.s != M.s + L.s) throw domain_error("extend: rank bookkeeping failed");
    std::vector<Mat> proj(M.n), sec(M.n);
    for (int v = 1; v <= M.n; ++v) {
        Mat hv = r > 0 ? hom_component(Om, L, hN, v) : Mat(R, L.s, 0);
        for (auto& e : hv.a) e = ser_is_zero(e) ? e : ser_neg(R, e);
        Mat A = mat_vstack(ext.syz.inclusion.empty() ? Mat(R, u, 0)
                                                     : ext.syz.inclusion[v - 1],
                           hv);
        Mat Uv;
        const auto div = smith_valuations(R, A, nullptr, &Uv);
        for (int i = 0; i < std::min<int>(static_cast<int>(div.size()), r); ++i)
            if (div[i] != 0) throw domain_error("extend: pushout cokernel not free");
        const Mat Uinv = solve_exact(R, Uv, mat_identity(R, u + L.s));
        proj[v - 1] = mat_submatrix(Uv, r, 0, E.s, u + L.s);
        sec[v - 1] = mat_submatrix(Uinv, 0, r, u + L.s, E.s);
    }
    const auto& P = ext.syz.cover.P;
    for (int v = 1; v <= M.n; ++v) {
        Mat bigX(R, u + L.s, u + L.s), bigY(R, u + L.s, u + L.s);
        for (int i = 0; i < u; ++i)
            for (int j = 0; j < u; ++j) {
                bigX.at(i, j) = P.X[v - 1].at(i, j);
                bigY.at(i, j) = P.Y[v - 1].at(i, j);
            }
        for (int i = 0; i < L.s; ++i)
            for (int j = 0; j < L.s; ++j) {
                bigX.at(u + i, u + j) = L.X[v - 1].at(i, j);
                bigY.at(u + i, u + j) = L.Y[v - 1].at(i, j);
            }
        const int vprev = (v + M.n - 2) % M.n;
        E.X.push_back(mat_mul(R, proj[v - 1], mat_mul(R, bigX, sec[vprev])));
        E.Y.push_back(mat_mul(R, proj[vprev], mat_mul(R, bigY, sec[v - 1])));
    }
    E.prec = std::min(M.prec, L.prec) - (M.n - M.k);
    assert_relations(E);
    return E;
}

TruncatedModule build_from_profile(const TruncatedRing& R, const Profile& P,
                                   std::uint64_t seed) {
    SplitMix64 rng(seed);
    TruncatedModule M = build_rank1(R, P.rows.front());
    for (int r = 1; r < P.rank(); ++r)
        M = extend_generic(M, build_rank1(R, P.rows[r]), rng);
    return M;
}

// ---- F_p polynomial helpers for the Fitting test ----
namespace {

using FpPoly = std::vector<std::uint32_t>; // coefficient i of x^i

void ptrim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly pmul(const TruncatedRing& R, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % R.p);
    }
    return out;
}

FpPoly pmod(const TruncatedRing& R, FpPoly a, const FpPoly& m) {
    ptrim(a);
    while (pdeg(a) >= pdeg(m)) {
        const std::uint32_t f = R.mul(a.back(), R.inv(m.back()));
        const size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[off + i] = R.sub(a[off + i], R.mul(f, m[i]));
        ptrim(a);
    }
    return a;
}

FpPoly pdivide(const TruncatedRing& R, FpPoly a, const FpPoly& m) {
    FpPoly quo(a.size() > m.size() ? a.size() - m.size() + 1 : 1, 0);
    ptrim(a);
    while (pdeg(a) >= pdeg(m)) {
        const std::uint32_t f = R.mul(a.back(), R.inv(m.back()));
        const size_t off = a.size() - m.size();
        quo[off] = f;
        for (size_t i = 0; i < m.size(); ++i)
            a[off + i] = R.sub(a[off + i], R.mul(f, m[i]));
        ptrim(a);
    }
    ptrim(quo);
    return quo;
}

FpPoly pmonic(const TruncatedRing& R, FpPoly f) {
    ptrim(f);
    if (f.empty()) return f;
    const std::uint32_t inv = R.inv(f.back());
    for (auto& c : f) c = R.mul(c, inv);
    return f;
}

FpPoly pgcd(const TruncatedRing& R, FpPoly a, FpPoly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        a = pmod(R, a, b);
        std::swap(a, b);
    }
    return pmonic(R, a);
}

FpPoly pderiv(const TruncatedRing& R, const FpPoly& f) {
    FpPoly out;
    for (size_t i = 1; i < f.size(); ++i)
        out.push_back(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(f[i]) * (i % R.p) % R.p));
    ptrim(out);
    return out;
}

FpPoly radical(const TruncatedRing& R, FpPoly f) {
    f = pmonic(R, f);
    if (pdeg(f) <= 1) return f;
    FpPoly d = pderiv(R, f);
    if (d.empty()) {
        // f = g(x^p) = g(x)^p over the prime field
        FpPoly g;
        for (size_t i = 0; i < f.size(); i += R.p) g.push_back(f[i]);
        return radical(R, g);
    }
    FpPoly gc = pgcd(R, f, d);
    if (pdeg(gc) == 0) return f;
    FpPoly w = pdivide(R, f, gc);
    FpPoly r2 = radical(R, gc);
    FpPoly common = pgcd(R, w, r2);
    return pdivide(R, pmul(R, w, r2), common);
}

// x^p mod f by square-and-multiply
FpPoly x_pow_p_mod(const TruncatedRing& R, const FpPoly& f) {
    FpPoly result{1};
    FpPoly base{0, 1};
    std::uint64_t e = R.p;
    while (e) {
        if (e & 1) result = pmod(R, pmul(R, result, base), f);
        base = pmod(R, pmul(R, base, base), f);
        e >>= 1;
    }
    return result;
}

// substitute g into h modulo f (Horner)
FpPoly pcompose_mod(const TruncatedRing& R, const FpPoly& h, const FpPoly& g,
                    const FpPoly& f) {
    FpPoly acc;
    for (size_t i = h.size(); i-- > 0;) {
        acc = pmod(R, pmul(R, acc, g), f);
        if (acc.empty()) acc = {0};
        acc[0] = R.add(acc[0], h[i]);
        ptrim(acc);
    }
    return acc;
}

// true when the squarefree monic r splits into >= 2 coprime factors
bool splits(const TruncatedRing& R, const FpPoly& r) {
    const int d = pdeg(r);
    if (d <= 1) return false;
    FpPoly frob = x_pow_p_mod(R, r); // x^(p^1) mod r
    for (int j = 1; 2 * j <= d; ++j) {
        if (j > 1) frob = pcompose_mod(R, frob, x_pow_p_mod(R, r), r);
        FpPoly diff = frob;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = R.sub(diff[1], 1); // x^(p^j) - x
        ptrim(diff);
        FpPoly g = pgcd(R, diff, r);
        // any factor caught at level j <= d/2 certifies >= 2 irreducible
        // factors: an irreducible of degree d is coprime to x^(p^j) - x
        if (pdeg(g) > 0) return true;
    }
    return false;
}

// minimal polynomial of a square F_p matrix by Krylov linear dependence
FpPoly fp_minpoly(const TruncatedRing& R, const std::vector<std::vector<std::uint32_t>>& A) {
    const int s = static_cast<int>(A.size());
    const int dim = s * s;
    std::vector<std::vector<std::uint32_t>> echelon;      // reduced vectors
    std::vector<FpPoly> combos;                           // their expressions in powers
    std::vector<std::vector<std::uint32_t>> power(
        static_cast<size_t>(s), std::vector<std::uint32_t>(static_cast<size_t>(s), 0));
    for (int i = 0; i < s; ++i) power[i][i] = 1; // A^0
    for (int degree = 0;; ++degree) {
        std::vector<std::uint32_t> vec(static_cast<size_t>(dim));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) vec[i * s + j] = power[i][j];
        FpPoly combo(static_cast<size_t>(degree) + 1, 0);
        combo[degree] = 1;
        // reduce against echelon
        for (size_t e = 0; e < echelon.size(); ++e) {
            int lead = -1;
            for (int i = 0; i < dim; ++i)
                if (echelon[e][i] != 0) { lead = i; break; }
            if (lead >= 0 && vec[lead] != 0) {
                const std::uint32_t f = R.mul(vec[lead], R.inv(echelon[e][lead]));
                for (int i = 0; i < dim; ++i)
                    vec[i] = R.sub(vec[i], R.mul(f, echelon[e][i]));
                for (size_t c = 0; c < combos[e].size(); ++c)
                    combo[c] = R.sub(combo[c], R.mul(f, combos[e][c]));
            }
        }
        if (std::all_of(vec.begin(), vec.end(), [](std::uint32_t c) { return c == 0; }))
            return pmonic(R, combo); // dependence found: the minimal polynomial
        echelon.push_back(std::move(vec));
        combos.push_back(std::move(combo));
        // next power
        std::vector<std::vector<std::uint32_t>> nxt(
            static_cast<size_t>(s), std::vector<std::uint32_t>(static_cast<size_t>(s), 0));
        for (int i = 0; i < s; ++i)
            for (int l = 0; l < s; ++l) {
                if (!A[i][l]) continue;
                for (int j = 0; j < s; ++j)
                    nxt[i][j] = static_cast<std::uint32_t>(
                        (nxt[i][j] + static_cast<std::uint64_t>(A[i][l]) * power[l][j]) % R.p);
            }
        power = std::move(nxt);
    }
}

FpPoly plcm(const TruncatedRing& R, const FpPoly& a, const FpPoly& b) {
    if (a.empty()) return pmonic(R, b);
    if (b.empty()) return pmonic(R, a);
    return pmonic(R, pdivide(R, pmul(R, a, b), pgcd(R, a, b)));
}

} // namespace

bool is_indecomposable(const TruncatedModule& M, int trials, std::uint64_t seed) {
    if (M.s <= 1) return !M.empty();
    const auto& R = M.ring;
    const HomSpace end = hom_space(M, M);
    // reductions of the basis modulo t, as tuples of vertex blocks
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> blocks;
    for (const auto& Fn : end.basis) {
        std::vector<std::vector<std::vector<std::uint32_t>>> tuple;
        for (int v = 1; v <= M.n; ++v)
            tuple.push_back(mat_mod_t(hom_component(M, M, Fn, v)));
        blocks.push_back(std::move(tuple));
    }
    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::uint32_t> coeff;
        for (size_t i = 0; i < blocks.size(); ++i) coeff.push_back(rng.mod(R.p));
        FpPoly mu;
        for (int v = 0; v < M.n; ++v) {
            std::vector<std::vector<std::uint32_t>> a(
                static_cast<size_t>(M.s), std::vector<std::uint32_t>(static_cast<size_t>(M.s), 0));
            for (size_t i = 0; i < blocks.size(); ++i) {
                if (!coeff[i]) continue;
                for (int r = 0; r < M.s; ++r)
                    for (int c = 0; c < M.s; ++c)
                        a[r][c] = static_cast<std::uint32_t>(
                            (a[r][c] +
                             static_cast<std::uint64_t>(coeff[i]) * blocks[i][v][r][c]) %
                            R.p);
            }
            mu = plcm(R, mu, fp_minpoly(R, a));
        }
        if (splits(R, radical(R, mu))) return false;
    }
    return true;
}

bool are_isomorphic(const TruncatedModule& M, const TruncatedModule& N, int trials,
                    std::uint64_t seed) {
    if (M.s != N.s) return false;
    if (M.empty()) return true;
    if (content_vector(M) != content_vector(N)) return false;
    if (projective_cover_indices(M) != projective_cover_indices(N)) return false;
    const auto& R = M.ring;
    const HomSpace hom = hom_space(M, N);
    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        Mat U(R, N.s, M.s);
        for (const auto& F : hom.basis) {
            const std::uint32_t c = rng.mod(R.p);
            if (!c) continue;
            for (size_t i = 0; i < U.a.size(); ++i)
                U.a[i] = ser_add(R, U.a[i], ser_scale(R, c, F.a[i]));
        }
        if (mat_det_val(R, U) == 0) return true;
    }
    return false;
}

TruncatedModule increase_module(const TruncatedModule& M, int j, ModIncMode mode) {
    if (j < 1 || j > M.n) throw std::invalid_argument("increase_module: j out of range");
    const auto& R = M.ring;
    TruncatedModule out;
    out.ring = R;
    out.n = M.n + 1;
    out.k = mode == ModIncMode::subset ? M.k + 1 : M.k;
    out.s = M.s;
    out.prec = M.prec;
    const Ser one = ser_const(R, 1), t = ser_tpow(R, 1);
    for (int v = 1; v <= M.n + 1; ++v) {
        if (v <= j) {
            out.X.push_back(M.X[v - 1]);
            out.Y.push_back(M.Y[v - 1]);
        } else if (v == j + 1) {
            out.X.push_back(mat_scalar(R, M.s, mode == ModIncMode::subset ? one : t));
            out.Y.push_back(mat_scalar(R, M.s, mode == ModIncMode::subset ? t : one));
        } else {
            out.X.push_back(M.X[v - 2]);
            out.Y.push_back(M.Y[v - 2]);
        }
    }
    assert_relations(out);
    return out;
}

TruncatedModule decrease_module(const TruncatedModule& M, int j, ModIncMode mode) {
    if (j < 1 || j > M.n) throw std::invalid_argument("decrease_module: j out of range");
    const auto& R = M.ring;
    const Mat& Xj = M.X[j - 1];
    const Mat& Yj = M.Y[j - 1];
    Mat T(R, M.s, M.s);
    if (mode == ModIncMode::subset) {
        if (mat_det_val(R, Xj) != 0)
            throw domain_error("decrease_module: label not common to all rows");
        const Ser det = mat_det(R, Xj);
        const Ser unit_inv = ser_inv_unit(R, det);
        T = mat_adjugate(R, Xj);
        for (auto& e : T.a) e = ser_mul(R, e, unit_inv); // T = X_j^{-1}, new x_j = Id
    } else {
        if (mat_det_val(R, Yj) != 0)
            throw domain_error("decrease_module: label present in some row");
        T = Yj; // T X_j = t Id since y_j x_j = t
    }
    // base change at vertex j, then drop the vertex
    Mat Tinv = solve_exact(R, T, mat_identity(R, M.s));
    TruncatedModule out;
    out.ring = R;
    out.n = M.n - 1;
    out.k = mode == ModIncMode::subset ? M.k - 1 : M.k;
    out.s = M.s;
    out.prec = M.prec;
    const int jn = j % M.n + 1; // vertex after j
    for (int v = 1; v <= M.n; ++v) {
        if (v == j) continue;
        Mat x = M.X[v - 1], y = M.Y[v - 1];
        if (v == jn) {
            x = mat_mul(R, x, Tinv);
            y = mat_mul(R, T, y);
        }
        out.X.push_back(std::move(x));
        out.Y.push_back(std::move(y));
    }
    assert_relations(out);
    return out;
}

std::vector<std::vector<int>> dimension_lattice(const TruncatedModule& M) {
    std::vector<std::vector<int>> out;
    if (M.empty()) return out;
    for (const auto& path : x_paths(M)) {
        auto vals = smith_valuations(M.ring, path);
        std::sort(vals.begin(), vals.end());
        out.push_back(std::move(vals));
    }
    return out;
}

} // namespace grasscat
