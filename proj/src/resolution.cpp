#include "cqs/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace cqs {

std::vector<long> Chain::self_intersections() const {
    std::vector<long> out;
    for (long a : alphas) out.push_back(-a);
    return out;
}

long Chain::dot(long s, long t) const {
    if (s == t) return -alphas[s - 1];
    return std::abs(s - t) == 1 ? 1 : 0;
}

long pair_with(const Chain& c, const Cycle& z, long t) {
    long n = c.n();
    long v = 0;
    if (t == 1) v += z[0];
    if (t == n) v += z[n + 1];
    for (long u = 1; u <= n; ++u) v += z[u] * c.dot(u, t);
    return v;
}

std::string cycle_str(const Cycle& z) {
    std::ostringstream os;
    long n = static_cast<long>(z.size()) - 2;
    bool first = true;
    auto term = [&](long c, const std::string& name) {
        if (c == 0) return;
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c;
        os << name;
    };
    term(z[0], "B");
    for (long t = 1; t <= n; ++t) term(z[t], "E" + std::to_string(t));
    term(z[n + 1], "A");
    if (first) os << "0";
    return os.str();
}

SymbolicSheaf SymbolicSheaf::make_zero(long n) {
    SymbolicSheaf s;
    s.support.assign(n, 0);
    s.degrees.assign(n, 0);
    return s;
}

std::string SymbolicSheaf::str() const {
    if (zero) return "0";
    std::ostringstream os;
    os << "O_{";
    bool first = true;
    for (size_t t = 0; t < support.size(); ++t) {
        if (!support[t]) continue;
        if (!first) os << "+";
        first = false;
        if (support[t] != 1) os << support[t];
        os << "E" << t + 1;
    }
    os << "}(";
    first = true;
    for (size_t t = 0; t < support.size(); ++t) {
        if (!support[t]) continue;
        if (!first) os << ",";
        first = false;
        os << degrees[t];
    }
    os << ")";
    if (shift) os << "[" << shift << "]";
    return os.str();
}

Chain chain(const CyclicType& t) { return Chain{hj_expand(t)}; }

std::vector<long> fundamental_cycle(const Chain& c) {
    long n = c.n();
    std::vector<long> z(n, 1);
    auto zdot = [&](long t) {
        long v = 0;
        for (long u = 1; u <= n; ++u) v += z[u - 1] * c.dot(u, t);
        return v;
    };
    for (bool again = true; again;) {
        again = false;
        for (long t = 1; t <= n; ++t)
            if (zdot(t) > 0) {
                ++z[t - 1];
                again = true;
            }
    }
    return z;
}

SymbolicSheaf psi_simple(const CyclicType& t, long i) {
    auto c = chain(t);
    long n = c.n();
    auto is = i_series(t);
    auto out = SymbolicSheaf::make_zero(n);
    long w = mod(t.a + 1 + i, t.r);
    if (w == 0) {
        out.zero = false;
        out.shift = 1;
        for (long u = 1; u <= n; ++u) {
            out.support[u - 1] = 1;
            long d = 0;
            for (long v = 1; v <= n; ++v) d += c.dot(v, u);
            out.degrees[u - 1] = d;
        }
        return out;
    }
    for (long u = 1; u <= n; ++u)
        if (w == is[u]) {
            out.zero = false;
            out.support[u - 1] = 1;
            out.degrees[u - 1] = -c.alphas[u - 1] + 1;
            return out;
        }
    return out;
}

std::vector<long> wunram_decomposition(const CyclicType& t, long l) {
    if (l < 0 || l >= t.r) throw ValidationError("weight must lie in 0..r-1");
    auto is = i_series(t);
    long n = static_cast<long>(is.size()) - 2;
    std::vector<long> d(n, 0);
    long rem = l;
    for (long u = 1; u <= n; ++u) {
        d[u - 1] = rem / is[u];
        rem -= d[u - 1] * is[u];
    }
    if (rem != 0) throw InternalError("Wunram decomposition did not terminate at zero");
    return d;
}

DivisorData divisor_data(const CyclicType& t) {
    long n = t.n();
    DivisorData dd;
    dd.pullback_x = h_series(t, 0);
    dd.pullback_y = h_series(t, n + 1);
    for (long s = 1; s <= n; ++s) {
        auto h = h_series(t, s);
        Cycle lo(n + 2, 0), hi(n + 2, 0);
        for (long u = 0; u < s; ++u) lo[u] = h[u];
        for (long u = s + 1; u <= n + 1; ++u) hi[u] = h[u];
        dd.D.emplace_back(lo, hi);
    }
    return dd;
}

namespace {

// Effective divisor on E plus one boundary component (A at n+1 or B at 0) with prescribed
// E_t-pairings, bounded above by `bound`. Must be unique.
Cycle bounded_effective(const Chain& c, const std::vector<long>& target, long boundary,
                        const Cycle& bound) {
    long n = c.n();
    RatMatrix q(n, RatVector(n));
    for (long s = 1; s <= n; ++s)
        for (long u = 1; u <= n; ++u) q[s - 1][u - 1] = c.dot(s, u);
    long touched = boundary == 0 ? 1 : n;
    RatVector rhs(n), e(n, 0);
    for (long s = 1; s <= n; ++s) rhs[s - 1] = target[s - 1];
    e[touched - 1] = 1;
    auto base = solve_unique(q, rhs);
    auto step = solve_unique(q, e);
    if (!base || !step) throw InternalError("chain intersection matrix is singular");
    std::vector<Cycle> found;
    for (long lam = 0; lam <= bound[boundary]; ++lam) {
        Cycle z(n + 2, 0);
        z[boundary] = lam;
        bool ok = true;
        for (long u = 1; u <= n && ok; ++u) {
            Rat x = (*base)[u - 1] - lam * (*step)[u - 1];
            if (x.get_den() != 1) {
                ok = false;
                break;
            }
            z[u] = to_long(x.get_num());
            ok = z[u] >= 0 && z[u] <= bound[u];
        }
        if (ok) found.push_back(z);
    }
    if (found.size() != 1)
        throw InternalError("expected a unique bounded effective section divisor, found " +
                            std::to_string(found.size()));
    return found[0];
}

}  // namespace

SectionDivisors section_divisors(const CyclicType& t) {
    auto c = chain(t);
    long n = c.n();
    auto dd = divisor_data(t);
    std::vector<std::vector<long>> w(t.r);
    for (long l = 0; l < t.r; ++l) w[l] = wunram_decomposition(t, l);
    SectionDivisors sd;
    for (long l = 0; l < t.r; ++l) {
        std::vector<long> tx(n), ty(n);
        long lx = mod(l + 1, t.r), ly = mod(l + t.a, t.r);
        for (long u = 0; u < n; ++u) {
            tx[u] = w[lx][u] - w[l][u];
            ty[u] = w[ly][u] - w[l][u];
        }
        sd.x.push_back(bounded_effective(c, tx, n + 1, dd.pullback_x));
        sd.y.push_back(bounded_effective(c, ty, 0, dd.pullback_y));
    }
    return sd;
}

SymbolicSheaf psi_toric_oracle(const CyclicType& t, long i) {
    return psi_toric_oracle(t, i, section_divisors(t));
}

SymbolicSheaf psi_toric_oracle(const CyclicType& t, long i, const SectionDivisors& sd) {
    auto c = chain(t);
    long n = c.n();
    std::vector<std::vector<long>> w(t.r);
    for (long l = 0; l < t.r; ++l) w[l] = wunram_decomposition(t, l);

    // R^v_{i+a+1} -> R^v_{i+1} (+) R^v_{i+a} -> R^v_i
    long i1 = mod(i + 1, t.r), ia = mod(i + t.a, t.r);
    const Cycle& X = sd.x[i];
    const Cycle& Y = sd.y[i];
    Cycle g(n + 2, 0), u(n + 2, 0), v(n + 2, 0);
    for (long p = 0; p <= n + 1; ++p) {
        g[p] = std::min(X[p], Y[p]);
        u[p] = X[p] - g[p];
        v[p] = Y[p] - g[p];
    }
    for (long p = 0; p <= n; ++p)
        if ((u[p] && v[p + 1]) || (v[p] && u[p + 1]))
            throw OracleError("coprime parts of the second map meet; cokernel has a point");

    Cycle tx(n + 2), ty(n + 2);
    for (long p = 0; p <= n + 1; ++p) {
        tx[p] = sd.y[i1][p] - v[p];
        ty[p] = sd.x[ia][p] - u[p];
    }
    if (tx != ty) throw OracleError("first map does not factor through the kernel bundle");
    for (long p = 0; p <= n + 1; ++p)
        if (tx[p] < 0) throw OracleError("first map does not factor through the kernel bundle");
    const Cycle& T = tx;

    bool h0 = std::any_of(g.begin(), g.end(), [](long x) { return x != 0; });
    bool hm1 = std::any_of(T.begin(), T.end(), [](long x) { return x != 0; });
    if (h0 && hm1) throw OracleError("complex has cohomology in two degrees");
    auto out = SymbolicSheaf::make_zero(n);
    if (!h0 && !hm1) return out;
    const Cycle& S = h0 ? g : T;
    if (S[0] || S[n + 1]) throw OracleError("cohomology has non-compact support");
    out.zero = false;
    out.shift = hm1 ? 1 : 0;
    for (long p = 1; p <= n; ++p) {
        if (!S[p]) continue;
        out.support[p - 1] = S[p];
        // c1(R^v_l).E_t = -d^(l)_t
        long deg = -w[i][p - 1];
        if (hm1) deg = -w[i1][p - 1] - w[ia][p - 1] + w[i][p - 1] + pair_with(c, g, p);
        out.degrees[p - 1] = deg;
    }
    return out;
}

}  // namespace cqs
