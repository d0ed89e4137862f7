#include "cqs/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cqs {

long det2(const LVec& u, const LVec& w) { return u[0] * w[1] - u[1] * w[0]; }

long det3(const LVec& a, const LVec& b, const LVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool primitive(const LVec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g == 1;
}

NormalForm normal_form_2d(const LVec& u, const LVec& w) {
    if (u.size() != 2 || w.size() != 2) throw ValidationError("normal form needs rank-2 vectors");
    long d = det2(u, w);
    if (d == 0) throw ValidationError("cone generators are collinear");
    if (!primitive(u) || !primitive(w)) throw ValidationError("cone generators must be primitive");
    NormalForm nf;
    nf.r = std::abs(d);
    long a = 0;
    if (nf.r > 1) {
        a = -1;
        for (long c = 1; c < nf.r; ++c)
            if (mod(u[0] + c * w[0], nf.r) == 0 && mod(u[1] + c * w[1], nf.r) == 0) {
                a = c;
                break;
            }
        if (a < 0) throw InternalError("no normal form weight found");
        nf.a_inv = inverse_weight(CyclicType{nf.r, a}).a;
    }
    nf.a_raw = a;
    nf.a = nf.r > 1 ? std::min(a, nf.a_inv) : 0;
    // f1 = (u + a w)/r, f2 = w is a basis; g = [f1 f2]^{-1}
    LVec f1{(u[0] + a * w[0]) / nf.r, (u[1] + a * w[1]) / nf.r};
    long df = det2(f1, w);
    nf.basis_change = {{w[1] * df, -w[0] * df}, {-f1[1] * df, f1[0] * df}};
    return nf;
}

namespace {

void add_faces(std::set<std::vector<int>>& out, const std::vector<int>& c) {
    size_t m = c.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> f;
        for (size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) f.push_back(c[i]);
        out.insert(f);
    }
}

}  // namespace

Fan Fan::from_maximal(int dim, std::vector<LVec> rays, const std::vector<std::vector<int>>& maximal) {
    Fan f;
    f.dim = dim;
    f.rays = std::move(rays);
    for (auto& r : f.rays) {
        if (static_cast<int>(r.size()) != dim) throw ValidationError("ray has wrong rank");
        if (!primitive(r)) throw ValidationError("ray is not primitive");
    }
    std::set<std::vector<int>> all;
    for (auto c : maximal) {
        std::sort(c.begin(), c.end());
        RatMatrix m(dim, RatVector(c.size()));
        for (size_t j = 0; j < c.size(); ++j)
            for (int i = 0; i < dim; ++i) m[i][j] = f.rays[c[j]][i];
        if (rref(m).size() != c.size()) throw ValidationError("cone generators are dependent");
        add_faces(all, c);
    }
    f.cones.assign(all.begin(), all.end());
    return f;
}

std::vector<std::vector<int>> Fan::maximal_cones() const {
    std::vector<std::vector<int>> out;
    for (auto& c : cones) {
        bool maximal = true;
        for (auto& d : cones)
            if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<Rat> Fan::coords_in(const std::vector<int>& c, const LVec& v) const {
    RatMatrix m(dim, RatVector(c.size()));
    RatVector b(dim);
    for (int i = 0; i < dim; ++i) {
        b[i] = v[i];
        for (size_t j = 0; j < c.size(); ++j) m[i][j] = rays[c[j]][i];
    }
    auto sol = solve_unique(m, b);
    if (!sol) return {};
    return *sol;
}

bool Fan::contains(const std::vector<int>& c, const LVec& v) const {
    auto x = coords_in(c, v);
    if (x.empty()) return false;
    return std::all_of(x.begin(), x.end(), [](const Rat& q) { return q >= 0; });
}

bool Fan::in_relative_interior(const std::vector<int>& c, const LVec& v) const {
    auto x = coords_in(c, v);
    if (x.empty()) return false;
    return std::all_of(x.begin(), x.end(), [](const Rat& q) { return q > 0; });
}

bool Fan::in_support(const LVec& v) const {
    for (auto& c : cones)
        if (contains(c, v)) return true;
    return false;
}

int Fan::ray_index(const LVec& v) const {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == v) return static_cast<int>(i);
    return -1;
}

Fan star_subdivide(const Fan& f, const LVec& v) {
    if (static_cast<int>(v.size()) != f.dim) throw ValidationError("vector has wrong rank");
    if (!primitive(v)) throw ValidationError("subdivision vector is not primitive");
    if (!f.in_support(v)) throw ValidationError("subdivision vector is not in the support");
    Fan g;
    g.dim = f.dim;
    g.rays = f.rays;
    int vi = f.ray_index(v);
    if (vi < 0) {
        vi = static_cast<int>(g.rays.size());
        g.rays.push_back(v);
    }
    std::set<std::vector<int>> out;
    std::vector<std::vector<int>> containing;
    for (auto& c : f.cones) {
        if (f.contains(c, v)) containing.push_back(c);
        else out.insert(c);
    }
    // cone(tau, v) for tau not containing v but contained with v in some sigma
    for (auto& tau : f.cones) {
        if (f.contains(tau, v)) continue;
        bool ok = false;
        for (auto& s : containing)
            if (std::includes(s.begin(), s.end(), tau.begin(), tau.end())) ok = true;
        if (!ok) continue;
        auto c = tau;
        c.push_back(vi);
        std::sort(c.begin(), c.end());
        out.insert(c);
    }
    out.insert({vi});
    g.cones.assign(out.begin(), out.end());
    return g;
}

namespace {

template <class F>
void for_box(int dim, long b, F&& fn) {
    LVec p(dim, -b);
    while (true) {
        if (std::any_of(p.begin(), p.end(), [](long x) { return x != 0; })) fn(p);
        int i = 0;
        while (i < dim && p[i] == b) p[i++] = -b;
        if (i == dim) return;
        ++p[i];
    }
}

}  // namespace

bool is_fan_on_box(const Fan& f, long b) {
    bool ok = true;
    for_box(f.dim, b, [&](const LVec& p) {
        if (!ok) return;
        int hits = 0;
        for (auto& c : f.cones) hits += f.in_relative_interior(c, p);
        if (hits > 1 || (hits == 0 && f.in_support(p))) ok = false;
    });
    return ok;
}

bool same_support_on_box(const Fan& f, const Fan& g, long b) {
    bool ok = true;
    for_box(f.dim, b, [&](const LVec& p) {
        if (ok && f.in_support(p) != g.in_support(p)) ok = false;
    });
    return ok;
}

std::vector<LVec> resolve_2d(const CyclicType& t) {
    auto is = i_series(t);
    long n = static_cast<long>(is.size()) - 2;
    std::vector<LVec> rho(n + 2);
    rho[0] = {0, 1};
    rho[n + 1] = {t.r, -t.a};
    for (long u = 1; u <= n; ++u) {
        LVec x{rho[n + 1][0] + is[u] * rho[u - 1][0], rho[n + 1][1] + is[u] * rho[u - 1][1]};
        if (x[0] % is[u - 1] || x[1] % is[u - 1])
            throw InternalError("resolution ray is not integral at t=" + std::to_string(u));
        rho[u] = {x[0] / is[u - 1], x[1] / is[u - 1]};
    }
    return rho;
}

bool JkFanReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const FanCheck& c) { return c.pass; });
}

namespace {

std::string vstr(const LVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

LVec lin(long a, const LVec& x, long b, const LVec& y) {
    LVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
    return z;
}

// exact division, or empty
LVec divide(const LVec& x, long d) {
    LVec z;
    for (long c : x) {
        if (c % d) return {};
        z.push_back(c / d);
    }
    return z;
}

}  // namespace

JkFanReport jk_fan_verify(long k) {
    if (k < 1) throw ValidationError("k must be at least 1");
    JkFanReport rep;
    rep.k = k;
    rep.rho1 = {k, k, 4 * k + 1};
    rep.rho2 = {1, 0, 0};
    rep.rho3 = {0, 1, 0};
    rep.rho4 = {-1, -1, -2};
    const auto &r1 = rep.rho1, &r2 = rep.rho2, &r3 = rep.rho3, &r4 = rep.rho4;

    bool integral = true;
    rep.v = divide(lin(4, r1, 1, lin(1, r2, 1, r3)), 4 * k + 1);
    integral = integral && !rep.v.empty();
    LVec v0 = divide(lin(1, r1, k, r4), 2 * k + 1);
    integral = integral && !v0.empty();
    rep.vs.push_back(v0);
    for (long i = 1; i <= k - 1 && integral; ++i) {
        LVec vi = divide(lin(1, r1, k - i, rep.vs.back()), k - (i - 1));
        integral = integral && !vi.empty();
        rep.vs.push_back(vi);
    }
    rep.checks.push_back({"integrality", integral, "v, v_0..v_{k-1} have integer coordinates"});
    if (!integral) return rep;
    const auto& v = rep.v;

    bool prim = primitive(v);
    for (auto& x : rep.vs) prim = prim && primitive(x);
    rep.checks.push_back({"primitivity", prim, "v=" + vstr(v) + " v_0=" + vstr(v0)});

    rep.checks.push_back({"rho1_from_rho4_v", lin(2, r1, 0, r1) == lin(1, r4, 2 * k + 1, v),
                          "2 rho_1 = rho_4 + (2k+1) v"});
    bool step = true;
    for (long i = 1; i <= k - 1; ++i) step = step && rep.vs[i] == lin(1, rep.vs[i - 1], 1, v);
    rep.checks.push_back({"vi_step", step, "v_i = v_{i-1} + v"});
    rep.checks.push_back({"rho1_last", r1 == lin(1, rep.vs.back(), 1, v), "rho_1 = v_{k-1} + v"});
    rep.checks.push_back({"v_decomposition", v == lin(1, lin(1, r2, 1, r3), 4, v0),
                          "v = rho_2 + rho_3 + 4 v_0"});
    LVec zero{0, 0, 0};
    rep.checks.push_back({"v0_relation", lin(2, v0, 1, lin(1, r2, 1, lin(1, r3, 1, r4))) == zero,
                          "2 v_0 + rho_2 + rho_3 + rho_4 = 0"});
    long d = det3(r2, r3, v0);
    rep.checks.push_back({"basis_det", std::abs(d) == 1, "det(rho_2, rho_3, v_0) = " + std::to_string(d)});

    // Build the subdivided fan and check it is a fan with unchanged support.
    Fan delta = Fan::from_maximal(3, {r1, r2, r3, r4}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    Fan f = star_subdivide(delta, v);
    f = star_subdivide(f, v0);
    for (long i = 1; i <= k - 1; ++i) f = star_subdivide(f, rep.vs[i]);
    long box = 3;
    bool fan_ok = is_fan_on_box(delta, box) && is_fan_on_box(f, box) &&
                  same_support_on_box(delta, f, box);
    rep.checks.push_back({"subdivision_fan", fan_ok,
                          std::to_string(f.maximal_cones().size()) + " maximal cones"});
    return rep;
}

}  // namespace cqs
