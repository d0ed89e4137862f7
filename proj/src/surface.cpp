#include "cqs/surface.hpp"

#include "cqs/cyclic.hpp"

#include <sstream>

namespace cqs {

std::string PicBasis::name(int idx) const {
    if (idx == H) return "H";
    if (idx >= 1 && idx <= 7) return "E" + std::to_string(idx);
    if (idx == G0) return "G0";
    int off = idx - 9;
    return "G" + std::to_string(off / k + 1) + "," + std::to_string(off % k + 1);
}

long pic_dot(const PicClass& a, const PicClass& b) {
    long s = a[0] * b[0];
    for (size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}

PicClass pic_add(const PicClass& a, const PicClass& b, long s) {
    PicClass c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += s * b[i];
    return c;
}

std::string pic_str(const PicBasis& b, const PicClass& c) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long v = c[i];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        long m = v < 0 ? -v : v;
        if (m != 1) os << m;
        os << b.name(static_cast<int>(i));
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

const int kConicPts[4][7] = {
    {1, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 0, 0, 0},
    {1, 0, 1, 0, 1, 1, 1},
    {0, 1, 0, 1, 1, 1, 1},
};

}  // namespace

Surface build_surface(long k) {
    if (k < 1) throw ValidationError("k must be at least 1");
    Surface s;
    s.basis.k = k;
    const auto& b = s.basis;
    int n = static_cast<int>(b.rank());
    PicClass zero(n, 0);

    s.H = zero;
    s.H[PicBasis::H] = 1;
    s.K = zero;
    s.K[PicBasis::H] = -3;
    for (int i = 1; i < n; ++i) s.K[i] = 1;

    int ncurves = 1 + 4 * static_cast<int>(k + 1) + 7;
    s.curve.assign(ncurves, zero);
    s.label.assign(ncurves, "");
    s.plane_degree.assign(ncurves, 0);

    PicClass& F = s.curve[s.F()];
    F[PicBasis::G0] = 1;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= k; ++j) F[b.G(i, j)] = -1;
    s.label[s.F()] = "F";

    for (int i = 1; i <= 4; ++i) {
        PicClass& c0 = s.curve[s.C(i, 0)];
        int deg = i <= 2 ? 1 : 2;
        c0[PicBasis::H] = deg;
        for (int t = 1; t <= 7; ++t) {
            c0[PicBasis::E(t)] = -kConicPts[i - 1][t - 1];
            s.A[i - 1][t - 1] = kConicPts[i - 1][t - 1];
        }
        c0[PicBasis::G0] = -1;
        c0[b.G(i, 1)] = -1;
        s.plane_degree[s.C(i, 0)] = deg;
        for (int j = 1; j <= k; ++j) {
            PicClass& c = s.curve[s.C(i, j)];
            c[b.G(i, j)] = 1;
            if (j < k) c[b.G(i, j + 1)] = -1;
        }
        for (int j = 0; j <= k; ++j) s.label[s.C(i, j)] = "C" + std::to_string(i) + "," + std::to_string(j);
    }
    for (int t = 1; t <= 7; ++t) {
        s.curve[s.L(t)][PicBasis::E(t)] = 1;
        s.label[s.L(t)] = "L" + std::to_string(t);
    }

    s.D = F;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= k; ++j) s.D = pic_add(s.D, s.curve[s.C(i, j)], j);
    return s;
}

Discrepancies discrepancies_closed_form(long k) {
    Discrepancies d;
    d.d = make_rat(-(4 * k - 1), 4 * k + 1);
    for (long j = 1; j <= k; ++j) d.dj.push_back(make_rat(-(k - j + 1), 2 * k + 1));
    return d;
}

Discrepancies discrepancies_solved(const Surface& s) {
    long k = s.k();
    std::vector<int> exc{s.F()};
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j < k; ++j) exc.push_back(s.C(i, j));
    size_t m = exc.size();
    RatMatrix a(m, RatVector(m));
    RatVector rhs(m);
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < m; ++c) a[r][c] = pic_dot(s.curve[exc[r]], s.curve[exc[c]]);
        rhs[r] = pic_dot(s.K, s.curve[exc[r]]);
    }
    auto x = solve_unique(a, rhs);
    if (!x) throw InternalError("exceptional locus has a degenerate intersection form");
    Discrepancies d;
    d.d = (*x)[0];
    for (long j = 1; j <= k; ++j) {
        Rat v = (*x)[j];
        for (int i = 2; i <= 4; ++i)
            if ((*x)[(i - 1) * k + j] != v) throw InternalError("discrepancies differ between the four 1/(2k+1)(1,k) points");
        d.dj.push_back(v);
    }
    return d;
}

Ranks ranks(long k) { return {9 + 4 * k, 11 + 4 * k, 8}; }

KClass KClass::shifted(int s) const { return s % 2 == 0 ? *this : scaled(-1); }

KClass KClass::operator+(const KClass& o) const {
    KClass r{rank + o.rank, pic_add(c1, o.c1), ch2 + o.ch2};
    return r;
}

KClass KClass::operator-(const KClass& o) const { return *this + o.scaled(-1); }

KClass KClass::scaled(long m) const {
    KClass r = *this;
    r.rank *= m;
    for (auto& v : r.c1) v *= m;
    r.ch2 *= m;
    return r;
}

long euler_pairing(const Surface& s, const KClass& x, const KClass& y) {
    Rat chi = x.rank * y.rank + x.rank * y.ch2 + y.rank * x.ch2 - pic_dot(x.c1, y.c1);
    Rat kt = 0;
    for (size_t i = 0; i < x.c1.size(); ++i) {
        Int v = x.rank * y.c1[i] - y.rank * x.c1[i];
        kt += Rat(v) * (i == 0 ? s.K[i] : -s.K[i]);
    }
    chi -= kt / 2;
    chi.canonicalize();
    if (chi.get_den() != 1) throw InternalError("non-integral Euler pairing");
    return to_long(chi.get_num());
}

std::string CurveSheaf::str(const Surface& s) const {
    if (zero) return "0";
    std::ostringstream os;
    os << "O_{";
    bool first = true;
    for (auto [c, m] : support) {
        if (!first) os << "+";
        if (m != 1) os << m;
        os << s.label[c];
        first = false;
    }
    os << "}(";
    first = true;
    for (auto [c, d] : degree) {
        if (!first) os << ",";
        os << d;
        first = false;
    }
    os << ")";
    if (shift) os << "[" << shift << "]";
    return os.str();
}

KClass kclass_of(const Surface& s, const CurveSheaf& c) {
    KClass k;
    k.c1.assign(s.basis.rank(), 0);
    if (c.zero) return k;
    long comps = 0, meets = 0, deg = 0;
    std::vector<int> ids;
    for (auto [id, m] : c.support) {
        if (m != 1) throw InternalError("non-reduced support has no closed-form class here");
        k.c1 = pic_add(k.c1, s.curve[id]);
        ids.push_back(id);
        ++comps;
        deg += c.degree.at(id);
    }
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b) meets += pic_dot(s.curve[ids[a]], s.curve[ids[b]]);
    if (meets != comps - 1) throw InternalError("support is not a tree of rational curves");
    Rat chi = deg + 1;
    k.ch2 = chi + Rat(pic_dot(s.K, k.c1), 2);
    k.ch2.canonicalize();
    return k.shifted(c.shift);
}

namespace {

CurveSheaf single(int id, long deg, int shift) {
    CurveSheaf c;
    c.zero = false;
    c.support[id] = 1;
    c.degree[id] = deg;
    c.shift = shift;
    return c;
}

CurveSheaf transport(const SymbolicSheaf& loc, const std::vector<int>& ids) {
    CurveSheaf c;
    if (loc.zero) return c;
    c.zero = false;
    c.shift = loc.shift;
    for (size_t t = 0; t < loc.support.size(); ++t) {
        if (loc.support[t] == 0) continue;
        c.support[ids[t]] = loc.support[t];
        c.degree[ids[t]] = loc.degrees[t];
    }
    return c;
}

}  // namespace

CurveSheaf psi_e(const Surface& s, long j) {
    long k = s.k();
    j = mod(j, 4 * k + 1);
    if (j == 4 * k - 1) return single(s.F(), -(4 * k + 1), 1);
    if (j == 4 * k) return single(s.F(), -4 * k, 0);
    return {};
}

CurveSheaf psi_ei(const Surface& s, int i, long j) {
    long k = s.k();
    j = mod(j, 2 * k + 1);
    if (j == k) {
        CurveSheaf c;
        c.zero = false;
        c.shift = 1;
        PicClass ci(s.basis.rank(), 0);
        for (int t = 0; t < k; ++t) ci = pic_add(ci, s.curve[s.C(i, t)]);
        for (int t = 0; t < k; ++t) {
            c.support[s.C(i, t)] = 1;
            c.degree[s.C(i, t)] = pic_dot(ci, s.curve[s.C(i, t)]);
        }
        return c;
    }
    if (j == 2 * k) return single(s.C(i, 0), -2, 0);
    if (j > k) return single(s.C(i, static_cast<int>(2 * k - j)), -1, 0);
    return {};
}

CurveSheaf psi_e_transported(const Surface& s, long j) {
    auto t = CyclicType::make(4 * s.k() + 1, 1);
    return transport(psi_simple(t, mod(j, t.r)), {s.F()});
}

CurveSheaf psi_ei_transported(const Surface& s, int i, long j) {
    auto t = CyclicType::make(2 * s.k() + 1, s.k());
    std::vector<int> ids;
    for (int u = 0; u < s.k(); ++u) ids.push_back(s.C(i, u));
    return transport(psi_simple(t, mod(j, t.r)), ids);
}

int bundle_rank(Bundle b) { return b == Bundle::T ? 2 : 1; }

std::vector<long> splitting(const Surface& s, Bundle b, int curve) {
    const auto& c = s.curve[curve];
    switch (b) {
        case Bundle::O: return {0};
        case Bundle::O1: return {pic_dot(s.H, c)};
        case Bundle::M: return {pic_dot(pic_add(s.H, s.D, -1), c)};
        case Bundle::T: {
            int d = s.plane_degree[curve];
            if (d == 0) return {0, 0};
            if (d == 1) return {1, 0};
            if (d == 2) return {1, 1};
            throw InternalError("no splitting recorded for this curve");
        }
    }
    throw InternalError("unknown bundle");
}

namespace {

long h0(long n) { return n >= 0 ? n + 1 : 0; }
long h1(long n) { return n <= -2 ? -n - 1 : 0; }

int single_curve(const CurveSheaf& t, long& d) {
    if (t.support.size() != 1 || t.support.begin()->second != 1)
        throw InternalError("torsion evaluation needs an irreducible reduced support");
    int c = t.support.begin()->first;
    d = t.degree.at(c);
    return c;
}

std::vector<long> shift_dims(const std::vector<long>& base, int shift) {
    // Ext^i(T[s], E) = Ext^{i-s}(T, E)
    std::vector<long> out(4, 0);
    for (int d = 0; d < 3; ++d) {
        int i = d + shift;
        if (base[d] == 0) continue;
        if (i < 0 || i > 3) throw InternalError("shifted torsion Ext leaves degrees 0..3");
        out[i] = base[d];
    }
    return out;
}

}  // namespace

std::vector<long> torsion_ext_bundle(const Surface& s, const CurveSheaf& t, Bundle b) {
    if (t.zero) return std::vector<long>(4, 0);
    long d;
    int c = single_curve(t, d);
    long kc = pic_dot(s.K, s.curve[c]);
    std::vector<long> base(3, 0);
    for (long a : splitting(s, b, c)) {
        long n = d + kc - a;
        base[1] += h1(n);
        base[2] += h0(n);
    }
    return shift_dims(base, t.shift);
}

std::vector<long> torsion_ext_cycle(const Surface& s, const CurveSheaf& t, const std::map<int, long>& z) {
    if (t.zero) return std::vector<long>(4, 0);
    long d;
    int c = single_curve(t, d);
    const auto& cc = s.curve[c];
    PicClass zc(s.basis.rank(), 0);
    for (auto [id, m] : z) zc = pic_add(zc, s.curve[id], m);
    long chi = -pic_dot(cc, zc);
    std::vector<long> base(3, 0);
    auto it = z.find(c);
    if (it != z.end() && it->second > 0) {
        PicClass rest = pic_add(zc, cc, -1);
        base[0] = h0(-pic_dot(rest, cc) - d);
        base[2] = h0(d + pic_dot(s.K, cc));
    }
    base[1] = base[0] + base[2] - chi;
    if (base[1] < 0) throw InternalError("negative Ext^1 from torsion evaluation");
    return shift_dims(base, t.shift);
}

}  // namespace cqs
