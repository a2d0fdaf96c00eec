#include "grasscat/roots.hpp"

#include <algorithm>
#include <sstream>

namespace grasscat {

Rational::Rational(long long n_, long long d_) : num(n_), den(d_) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
}

RootVector::RootVector(int n_, int k_, std::vector<long long> x_)
    : n(n_), k(k_), x(std::move(x_)) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("RootVector: bad (k, n)");
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("RootVector: wrong length");
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::RealRoot: return "real";
        case RootType::ImaginaryRoot: return "imaginary";
        default: return "not-a-root";
    }
}

Rational quad_form(const RootVector& v) {
    long long s2 = 0;
    for (long long xi : v.x) s2 += xi * xi;
    const long long s = v.sum();
    return Rational(s2) + Rational(2 - v.k, static_cast<long long>(v.k) * v.k) * Rational(s * s);
}

Rational bilinear(const RootVector& v, const RootVector& w) {
    if (v.n != w.n || v.k != w.k) throw domain_error("bilinear: mismatched (n, k)");
    long long dot = 0;
    for (int i = 0; i < v.n; ++i) dot += v.x[i] * w.x[i];
    return Rational(dot) +
           Rational(2 - v.k, static_cast<long long>(v.k) * v.k) * Rational(v.sum() * w.sum());
}

RootVector generator(int n, int k, int idx) {
    std::vector<long long> x(n, 0);
    if (idx >= 1 && idx <= n - 1) {
        x[idx - 1] = -1;
        x[idx] = 1;
    } else if (idx == n) {
        for (int i = 0; i < k; ++i) x[i] = 1;
    } else {
        throw std::invalid_argument("generator: index out of range");
    }
    return RootVector(n, k, std::move(x));
}

long long pairing(const RootVector& v, int idx) {
    if (idx >= 1 && idx <= v.n - 1) return v.x[idx] - v.x[idx - 1];
    if (idx == v.n) {
        long long head = 0;
        for (int i = 0; i < v.k; ++i) head += v.x[i];
        const long long s = v.sum();
        if (s % v.k != 0) throw domain_error("pairing: not in Z^n(k)");
        return head + (2 - v.k) * (s / v.k);
    }
    throw std::invalid_argument("pairing: index out of range");
}

RootVector reflect(const RootVector& v, int idx) {
    RootVector out = v;
    if (idx >= 1 && idx <= v.n - 1) {
        std::swap(out.x[idx - 1], out.x[idx]);
        return out;
    }
    if (idx == v.n) {
        long long tail = 0;
        for (int i = v.k; i < v.n; ++i) tail += v.x[i];
        const long long s = v.sum();
        if ((2 * s) % v.k != 0) throw domain_error("reflect: s_beta needs integral r");
        const long long r = tail - 2 * s / v.k;
        for (int i = 0; i < v.k; ++i) out.x[i] += r;
        return out;
    }
    throw std::invalid_argument("reflect: index out of range");
}

RootVector apply_word(const RootVector& v, const std::vector<int>& word) {
    RootVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(out, *it);
    return out;
}

SimpleRootCoords to_simple_coords(const RootVector& v) {
    const long long s = v.sum();
    if (s % v.k != 0) throw domain_error("to_simple_coords: not in Z^n(k)");
    SimpleRootCoords out;
    out.c_beta = s / v.k;
    out.c.resize(v.n - 1);
    long long acc = 0;
    for (int j = 1; j <= v.n - 1; ++j) {
        acc += v.x[j - 1] - (j <= v.k ? out.c_beta : 0);
        out.c[j - 1] = -acc;
    }
    return out;
}

RootVector from_simple_coords(int n, int k, const SimpleRootCoords& c) {
    if (static_cast<int>(c.c.size()) != n - 1)
        throw std::invalid_argument("from_simple_coords: wrong length");
    std::vector<long long> x(n, 0);
    for (int i = 1; i <= n; ++i) {
        const long long ci = (i <= n - 1) ? c.c[i - 1] : 0;
        const long long cprev = (i >= 2) ? c.c[i - 2] : 0;
        x[i - 1] = (i <= k ? c.c_beta : 0) + cprev - ci;
    }
    return RootVector(n, k, std::move(x));
}

namespace {

bool is_zero(const SimpleRootCoords& c) {
    if (c.c_beta != 0) return false;
    return std::all_of(c.c.begin(), c.c.end(), [](long long v) { return v == 0; });
}

// -1: all <= 0, +1: all >= 0, 0: mixed signs.
int sign_state(const SimpleRootCoords& c) {
    bool pos = c.c_beta > 0, neg = c.c_beta < 0;
    for (long long v : c.c) {
        pos = pos || v > 0;
        neg = neg || v < 0;
    }
    if (pos && neg) return 0;
    return neg ? -1 : 1;
}

// Generator index when the coefficient vector is a simple root, else 0.
int as_simple_root(const SimpleRootCoords& c) {
    int idx = 0, count = 0;
    if (c.c_beta != 0) {
        if (c.c_beta != 1) return 0;
        idx = static_cast<int>(c.c.size()) + 1;
        ++count;
    }
    for (size_t i = 0; i < c.c.size(); ++i) {
        if (c.c[i] == 0) continue;
        if (c.c[i] != 1) return 0;
        idx = static_cast<int>(i) + 1;
        ++count;
    }
    return count == 1 ? idx : 0;
}

// Support connectivity in the J_{k,n} diagram: path 1..n-1, node n ~ node k.
bool support_connected(const SimpleRootCoords& c, int n, int k) {
    std::vector<char> in(n + 1, 0);
    for (int i = 1; i <= n - 1; ++i) in[i] = c.c[i - 1] != 0;
    in[n] = c.c_beta != 0;
    std::vector<std::vector<int>> adj(n + 1);
    for (int i = 1; i <= n - 2; ++i) {
        adj[i].push_back(i + 1);
        adj[i + 1].push_back(i);
    }
    adj[n].push_back(k);
    adj[k].push_back(n);
    int start = 0;
    for (int i = 1; i <= n; ++i)
        if (in[i]) { start = i; break; }
    if (!start) return false;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (in[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    for (int i = 1; i <= n; ++i)
        if (in[i] && !seen[i]) return false;
    return true;
}

} // namespace

RootType classify(const RootVector& v0) {
    if (!v0.in_lattice()) throw domain_error("classify: not in Z^n(k)");
    RootVector v = v0;
    SimpleRootCoords c = to_simple_coords(v);
    if (is_zero(c)) throw domain_error("classify: zero vector");
    int sgn = sign_state(c);
    if (sgn == 0) return RootType::NotRoot;
    if (sgn < 0) {
        for (auto& xi : v.x) xi = -xi;
        c = to_simple_coords(v);
    }
    while (true) {
        if (as_simple_root(c) != 0) return RootType::RealRoot;
        int pos = 0;
        for (int idx = 1; idx <= v.n; ++idx) {
            if (pairing(v, idx) > 0) { pos = idx; break; }
        }
        if (pos == 0)
            return support_connected(c, v.n, v.k) ? RootType::ImaginaryRoot
                                                  : RootType::NotRoot;
        v = reflect(v, pos);
        c = to_simple_coords(v);
        // leaving the positive cone means the input was not a root; this
        // also catches c*alpha_i with c >= 2, which reflects to -c*alpha_i
        if (sign_state(c) != 1) return RootType::NotRoot;
    }
}

ProfileRootData profile_root(const Profile& P) {
    ProfileRootData out;
    out.x = RootVector(P.n, P.k, multiplicity_vector(P));
    out.q = quad_form(out.x);
    out.type = classify(out.x);
    out.coords = to_simple_coords(out.x);
    return out;
}

std::string format_simple_coords(const SimpleRootCoords& c) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](long long coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (!first) os << (coeff > 0 ? "+" : "-");
        else if (coeff < 0) os << "-";
        const long long a = coeff < 0 ? -coeff : coeff;
        if (a != 1) os << a;
        os << sym;
        first = false;
    };
    term(c.c_beta, "β");
    for (size_t i = 0; i < c.c.size(); ++i)
        term(c.c[i], "α" + std::to_string(i + 1));
    if (first) os << "0";
    return os.str();
}

} // namespace grasscat
