#include "cqs/eckardt.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cqs {

namespace {

using UPoly = std::vector<Rat>;   // coefficient of lambda^i at index i

UPoly padd(const UPoly& a, const UPoly& b) {
    UPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

UPoly pmul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

UPoly pscale(const UPoly& a, const Rat& s) {
    UPoly c = a;
    for (auto& x : c) x *= s;
    return c;
}

void ptrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// divide by (lambda - r); false if r is not a root
bool pdivide_root(UPoly& a, const Rat& r) {
    ptrim(a);
    if (a.empty()) return false;
    size_t n = a.size() - 1;
    UPoly q(n, 0);
    Rat carry = 0;
    for (size_t i = n + 1; i-- > 0;) {
        Rat v = a[i] + carry * r;
        if (i == 0) {
            if (v != 0) return false;
        } else {
            q[i - 1] = v;
        }
        carry = v;
    }
    a = q;
    return true;
}

UPoly ppow(const UPoly& a, int e) {
    UPoly r{1};
    for (int i = 0; i < e; ++i) r = pmul(r, a);
    return r;
}

using UPoint = std::array<UPoly, 3>;

UPoly eval_poly(const PlaneCurve& f, const UPoint& p) {
    auto ms = monomials(f.degree);
    UPoly out;
    for (size_t m = 0; m < ms.size(); ++m) {
        if (f.coeffs[m] == 0) continue;
        auto t = pmul(pmul(ppow(p[0], ms[m][0]), ppow(p[1], ms[m][1])), ppow(p[2], ms[m][2]));
        out = padd(out, pscale(t, f.coeffs[m]));
    }
    return out;
}

Rat ipow(const Rat& x, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// d^k/dx_a... of a monomial at p, derivative multi-index der
Rat mono_deriv(const std::array<int, 3>& m, const std::array<int, 3>& der, const PlanePoint& p) {
    Rat v = 1;
    for (int i = 0; i < 3; ++i) {
        if (der[i] > m[i]) return 0;
        for (int k = 0; k < der[i]; ++k) v *= m[i] - k;
        v *= ipow(p.c[i], m[i] - der[i]);
    }
    return v;
}

Rat det3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b, const std::array<Rat, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::array<Rat, 3> cross(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool proportional(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    auto c = cross(a, b);
    return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

bool is_zero(const std::array<Rat, 3>& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

}  // namespace

PlanePoint PlanePoint::make(Rat x, Rat y, Rat z) {
    PlanePoint p{{x, y, z}};
    for (int i = 0; i < 3; ++i)
        if (p.c[i] != 0) {
            Rat s = p.c[i];
            for (auto& v : p.c) v /= s;
            return p;
        }
    throw ValidationError("point has all coordinates zero");
}

std::string PlanePoint::str() const {
    return "(" + c[0].get_str() + ":" + c[1].get_str() + ":" + c[2].get_str() + ")";
}

std::vector<std::array<int, 3>> monomials(int degree) {
    std::vector<std::array<int, 3>> out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    return out;
}

PlaneCurve PlaneCurve::make(int degree, std::vector<Rat> coeffs) {
    if (degree < 1 || degree > 3) throw ValidationError("curve degree must be 1, 2 or 3");
    if (coeffs.size() != monomials(degree).size())
        throw ValidationError("wrong number of coefficients for degree " + std::to_string(degree));
    for (auto& c : coeffs)
        if (c != 0) {
            Rat s = c;
            for (auto& x : coeffs) x /= s;
            return PlaneCurve{degree, coeffs};
        }
    throw ValidationError("curve has all coefficients zero");
}

Rat PlaneCurve::eval(const PlanePoint& p) const {
    auto ms = monomials(degree);
    Rat v = 0;
    for (size_t m = 0; m < ms.size(); ++m) v += coeffs[m] * mono_deriv(ms[m], {0, 0, 0}, p);
    return v;
}

std::array<Rat, 3> PlaneCurve::gradient(const PlanePoint& p) const {
    auto ms = monomials(degree);
    std::array<Rat, 3> g{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> der{0, 0, 0};
        der[i] = 1;
        for (size_t m = 0; m < ms.size(); ++m) g[i] += coeffs[m] * mono_deriv(ms[m], der, p);
    }
    return g;
}

std::array<std::array<Rat, 3>, 3> PlaneCurve::hessian(const PlanePoint& p) const {
    auto ms = monomials(degree);
    std::array<std::array<Rat, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<int, 3> der{0, 0, 0};
            ++der[i];
            ++der[j];
            h[i][j] = 0;
            for (size_t m = 0; m < ms.size(); ++m) h[i][j] += coeffs[m] * mono_deriv(ms[m], der, p);
        }
    return h;
}

PlaneCurve PlaneCurve::operator*(const PlaneCurve& o) const {
    int d = degree + o.degree;
    auto ma = monomials(degree), mb = monomials(o.degree), mc = monomials(d);
    std::map<std::array<int, 3>, Rat> acc;
    for (size_t i = 0; i < ma.size(); ++i)
        for (size_t j = 0; j < mb.size(); ++j)
            acc[{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]}] +=
                coeffs[i] * o.coeffs[j];
    std::vector<Rat> c;
    for (auto& m : mc) c.push_back(acc[m]);
    return PlaneCurve::make(d, c);
}

PlaneCurve line_through(const PlanePoint& p, const PlanePoint& q) {
    auto l = cross(p.c, q.c);
    if (is_zero(l)) throw ValidationError("line through coincident points " + p.str());
    return PlaneCurve::make(1, {l[0], l[1], l[2]});
}

PlaneCurve pencil(const PlaneCurve& a, const Rat& lam, const PlaneCurve& b) {
    if (a.degree != b.degree) throw ValidationError("pencil members differ in degree");
    std::vector<Rat> c(a.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] + lam * b.coeffs[i];
    return PlaneCurve::make(a.degree, c);
}

bool on_curve(const PlaneCurve& f, const PlanePoint& p) { return f.eval(p) == 0; }

bool is_node(const PlaneCurve& f, const PlanePoint& p) {
    if (!is_zero(f.gradient(p))) return false;
    RatMatrix h(3, RatVector(3));
    auto hh = f.hessian(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = hh[i][j];
    // rank 2: a reduced double point with two branches or a cusp has rank 1
    return rref(h).size() == 2;
}

bool tangent_at(const PlaneCurve& f, const PlaneCurve& g, const PlanePoint& p) {
    if (!on_curve(f, p) || !on_curve(g, p)) return false;
    auto a = f.gradient(p), b = g.gradient(p);
    return !is_zero(a) && !is_zero(b) && proportional(a, b);
}

PlaneCurve curve_from_conditions(int degree, const std::vector<Condition>& conds) {
    auto ms = monomials(degree);
    RatMatrix rows;
    for (auto& c : conds) {
        if (c.kind == Condition::Through) {
            RatVector r;
            for (auto& m : ms) r.push_back(mono_deriv(m, {0, 0, 0}, c.p));
            rows.push_back(r);
        } else if (c.kind == Condition::TangentDir) {
            RatVector r;
            for (auto& m : ms) {
                Rat v = 0;
                for (int i = 0; i < 3; ++i) {
                    std::array<int, 3> der{0, 0, 0};
                    der[i] = 1;
                    v += c.dir.c[i] * mono_deriv(m, der, c.p);
                }
                r.push_back(v);
            }
            rows.push_back(r);
        } else {
            for (int i = 0; i < 3; ++i) {
                std::array<int, 3> der{0, 0, 0};
                der[i] = 1;
                RatVector r;
                for (auto& m : ms) r.push_back(mono_deriv(m, der, c.p));
                rows.push_back(r);
            }
        }
    }
    auto ns = nullspace(rows);
    if (ns.size() != 1)
        throw ValidationError("degenerate seed: conditions leave a " + std::to_string(ns.size()) +
                              "-dimensional space of degree-" + std::to_string(degree) + " curves");
    return PlaneCurve::make(degree, ns[0]);
}

PlanePoint residual_on_line(const PlaneCurve& s, const PlanePoint& q, const PlanePoint& w) {
    if (!on_curve(s, q)) throw ValidationError("base point is not on the curve");
    UPoint p;
    for (int i = 0; i < 3; ++i) p[i] = {q.c[i], w.c[i]};
    auto g = eval_poly(s, p);
    g.resize(s.degree + 1, 0);
    if (!pdivide_root(g, 0)) throw InternalError("base point is not a root");
    ptrim(g);
    if (g.size() != 2) throw ValidationError("degenerate seed: line meets the conic only at q");
    Rat mu = -g[0] / g[1];
    return PlanePoint::make(q.c[0] + mu * w.c[0], q.c[1] + mu * w.c[1], q.c[2] + mu * w.c[2]);
}

PlanePoint residual_on_conic(const PlaneCurve& s, const PlanePoint& p0, const PlaneCurve& f,
                             const std::vector<KnownRoot>& known) {
    if (s.degree != 2) throw ValidationError("parametrization needs a conic");
    if (!on_curve(s, p0)) throw ValidationError("base point is not on the conic");
    auto grad0 = s.gradient(p0);
    std::vector<std::array<Rat, 3>> cand{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                         {0, 1, 1}, {1, 0, 1}, {1, 2, 3}, {3, -1, 2}};
    for (size_t a = 0; a < cand.size(); ++a)
        for (size_t b = 0; b < cand.size(); ++b) {
            if (a == b) continue;
            const auto &q1 = cand[a], &q2 = cand[b];
            if (det3(p0.c, q1, q2) == 0) continue;
            UPoint L;
            for (int i = 0; i < 3; ++i) L[i] = {q1[i], q2[i]};
            UPoly sl = eval_poly(s, L);
            UPoly gl;
            for (int i = 0; i < 3; ++i) gl = padd(gl, pscale(L[i], grad0[i]));
            UPoint P;
            for (int i = 0; i < 3; ++i)
                P[i] = padd(pscale(sl, p0.c[i]), pscale(pmul(gl, L[i]), -1));
            UPoly g = eval_poly(f, P);
            ptrim(g);
            if (g.size() != size_t(2 * f.degree + 1)) continue;   // a root went to infinity
            bool ok = true;
            for (auto& k : known) {
                Rat lam;
                if (k.p == p0) {
                    auto t = k.tangent ? std::array<Rat, 3>{k.tangent->coeffs[0], k.tangent->coeffs[1],
                                                            k.tangent->coeffs[2]}
                                       : grad0;
                    Rat den = dot3(t, q2);
                    if (den == 0) {
                        ok = false;
                        break;
                    }
                    lam = -dot3(t, q1) / den;
                } else {
                    Rat den = det3(p0.c, k.p.c, q2);
                    if (den == 0) {
                        ok = false;
                        break;
                    }
                    lam = -det3(p0.c, k.p.c, q1) / den;
                }
                for (int m = 0; m < k.mult && ok; ++m)
                    if (!pdivide_root(g, lam))
                        throw ValidationError("degenerate seed: " + k.p.str() +
                                              " is not an intersection of the expected multiplicity");
            }
            if (!ok) continue;
            ptrim(g);
            if (g.size() != 2) throw InternalError("residual intersection is not a single point");
            Rat lam = -g[0] / g[1];
            std::array<Rat, 3> pt;
            for (int i = 0; i < 3; ++i) {
                Rat v = 0, pw = 1;
                for (auto& c : P[i]) {
                    v += c * pw;
                    pw *= lam;
                }
                pt[i] = v;
            }
            return PlanePoint::make(pt[0], pt[1], pt[2]);
        }
    throw ValidationError("degenerate seed: no usable parametrization of the conic");
}

GeneralPosition general_position_check(const std::array<PlanePoint, 7>& pts) {
    GeneralPosition gp;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (pts[i] == pts[j]) {
                gp.pass = false;
                gp.witness = "coincident x" + std::to_string(i + 1) + " x" + std::to_string(j + 1);
                return gp;
            }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                if (det3(pts[i].c, pts[j].c, pts[k].c) == 0) {
                    gp.pass = false;
                    gp.witness = "collinear x" + std::to_string(i + 1) + " x" + std::to_string(j + 1) +
                                 " x" + std::to_string(k + 1);
                    return gp;
                }
    auto ms = monomials(2);
    for (int skip = 0; skip < 7; ++skip) {
        RatMatrix m;
        for (int i = 0; i < 7; ++i) {
            if (i == skip) continue;
            RatVector r;
            for (auto& mono : ms) r.push_back(mono_deriv(mono, {0, 0, 0}, pts[i]));
            m.push_back(r);
        }
        if (det(m) == 0) {
            gp.pass = false;
            gp.witness = "six points on a conic (all but x" + std::to_string(skip + 1) + ")";
            return gp;
        }
    }
    return gp;
}

namespace {

PlanePoint pt(long x, long y, long z) { return PlanePoint::make(x, y, z); }

std::array<Rat, 3> line_of(const PlaneCurve& l) { return {l.coeffs[0], l.coeffs[1], l.coeffs[2]}; }

}  // namespace

SeedA default_seed_a() {
    SeedA s;
    s.q = pt(0, 0, 1);
    s.p5 = pt(3, -1, -1);
    s.p6 = pt(1, 2, -1);
    s.p7 = pt(0, 2, 1);
    s.w1 = pt(4, 1, 0);
    s.w2 = pt(1, -2, 0);
    s.lam1 = Rat(1);
    s.lam2 = Rat(4);
    return s;
}

Configuration build_config_a(const SeedA& s) {
    for (auto* p : {&s.p5, &s.p6, &s.p7})
        if (*p == s.q) throw ValidationError("degenerate seed: base point coincides with q");
    if (s.lam1 == s.lam2) throw ValidationError("degenerate seed: the two conics coincide");
    auto ca = line_through(s.q, s.p5) * line_through(s.p6, s.p7);
    auto cb = line_through(s.q, s.p6) * line_through(s.p5, s.p7);
    auto s1 = pencil(ca, s.lam1, cb);
    auto s2 = pencil(ca, s.lam2, cb);
    Configuration c;
    c.variant = 'a';
    c.eckardt = s.q;
    c.direction = s.q;
    c.points = {residual_on_line(s1, s.q, s.w1), residual_on_line(s2, s.q, s.w1),
                residual_on_line(s1, s.q, s.w2), residual_on_line(s2, s.q, s.w2),
                s.p5, s.p6, s.p7};
    c.curves = {line_through(s.q, s.w1), line_through(s.q, s.w2), s1, s2};
    for (auto& p : c.points)
        if (p == s.q) throw ValidationError("degenerate seed: a line is tangent to a conic at q");
    auto gp = general_position_check(c.points);
    if (!gp.pass) throw ValidationError("degenerate seed: " + gp.witness);
    return c;
}

SeedB default_seed_b() {
    return SeedB{{pt(0, 0, 1), pt(4, 1, -1), pt(2, 2, -1), pt(1, -1, 1), pt(2, 0, 1), pt(1, -2, 1)}};
}

Configuration build_config_b(const SeedB& s) {
    using C = Condition;
    const auto& x = s.x;
    auto s1 = curve_from_conditions(2, {{C::Through, x[0], {}}, {C::Through, x[1], {}},
                                        {C::Through, x[2], {}}, {C::Through, x[3], {}},
                                        {C::Through, x[4], {}}});
    auto t = line_of(PlaneCurve::make(1, {s1.gradient(x[0])[0], s1.gradient(x[0])[1],
                                          s1.gradient(x[0])[2]}));
    auto w = cross(t, x[0].c);
    PlanePoint dir = PlanePoint::make(w[0], w[1], w[2]);
    auto s2 = curve_from_conditions(2, {{C::Through, x[0], {}}, {C::TangentDir, x[0], dir},
                                        {C::Through, x[1], {}}, {C::Through, x[2], {}},
                                        {C::Through, x[5], {}}});
    auto s3 = curve_from_conditions(2, {{C::Through, x[0], {}}, {C::TangentDir, x[0], dir},
                                        {C::Through, x[3], {}}, {C::Through, x[4], {}},
                                        {C::Through, x[5], {}}});
    auto tl = PlaneCurve::make(1, {t[0], t[1], t[2]});
    auto x7 = residual_on_conic(s2, x[0], s3, {{x[0], 2, tl}, {x[5], 1, std::nullopt}});
    Configuration c;
    c.variant = 'b';
    c.eckardt = x[0];
    c.direction = dir;
    c.points = {x[0], x[1], x[2], x[3], x[4], x[5], x7};
    c.curves = {s1, s2, s3};
    c.exceptional_member = true;
    auto gp = general_position_check(c.points);
    if (!gp.pass) throw ValidationError("degenerate seed: " + gp.witness);
    return c;
}

SeedC default_seed_c() {
    return SeedC{{pt(0, 0, 1), pt(2, 2, 1), pt(4, 1, 1), pt(3, 4, 1), pt(2, -1, -1)}, pt(3, -1, 1)};
}

Configuration build_config_c(const SeedC& s) {
    using C = Condition;
    const auto& x = s.x;
    auto t = line_through(x[0], x[1]);
    auto conic = curve_from_conditions(2, {{C::Through, x[0], {}}, {C::TangentDir, x[0], x[1]},
                                           {C::Through, x[2], {}}, {C::Through, x[3], {}},
                                           {C::Through, x[4], {}}});
    auto cubic = curve_from_conditions(3, {{C::Through, x[0], {}}, {C::TangentDir, x[0], x[1]},
                                           {C::Through, x[1], {}}, {C::Through, x[2], {}},
                                           {C::Through, x[3], {}}, {C::Through, x[4], {}},
                                           {C::Singular, s.node, {}}});
    auto x6 = residual_on_conic(conic, x[0], cubic,
                                {{x[0], 2, t}, {x[2], 1, std::nullopt}, {x[3], 1, std::nullopt},
                                 {x[4], 1, std::nullopt}});
    Configuration c;
    c.variant = 'c';
    c.eckardt = x[0];
    c.direction = x[1];
    c.points = {x[0], x[1], x[2], x[3], x[4], x6, s.node};
    c.curves = {t, conic, cubic};
    c.exceptional_member = true;
    auto gp = general_position_check(c.points);
    if (!gp.pass) throw ValidationError("degenerate seed: " + gp.witness);
    if (!is_node(cubic, s.node)) throw ValidationError("degenerate seed: cubic is not nodal at x7");
    return c;
}

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

struct Incidence {
    int degree;
    std::vector<int> through;   // 1-based point labels
};

std::vector<Incidence> incidences(char v) {
    if (v == 'a') return {{1, {1, 2}}, {1, {3, 4}}, {2, {1, 3, 5, 6, 7}}, {2, {2, 4, 5, 6, 7}}};
    if (v == 'b') return {{2, {1, 2, 3, 4, 5}}, {2, {1, 2, 3, 6, 7}}, {2, {1, 4, 5, 6, 7}}};
    if (v == 'c') return {{1, {1, 2}}, {2, {1, 3, 4, 5, 6}}, {3, {1, 2, 3, 4, 5, 6, 7}}};
    throw ValidationError(std::string("unknown variant '") + v + "'");
}

}  // namespace

ValidationReport validate_config(const Configuration& c) {
    ValidationReport rep;
    auto inc = incidences(c.variant);
    auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
    add("curve_count", c.curves.size() == inc.size());
    if (c.curves.size() != inc.size()) return rep;
    std::string names = c.variant == 'a' ? "t1 t2 s1 s2" : c.variant == 'b' ? "s1 s2 s3" : "t s cubic";
    std::istringstream ns(names);
    std::vector<std::string> cn;
    for (std::string w; ns >> w;) cn.push_back(w);
    for (size_t i = 0; i < inc.size(); ++i) {
        add(cn[i] + "_degree", c.curves[i].degree == inc[i].degree);
        for (int p : inc[i].through)
            add(cn[i] + "_through_x" + std::to_string(p), on_curve(c.curves[i], c.points[p - 1]));
    }
    if (c.variant == 'a') {
        bool q_new = std::find(c.points.begin(), c.points.end(), c.eckardt) == c.points.end();
        add("q_not_blown_up", q_new);
        for (size_t i = 0; i < 4; ++i) add(cn[i] + "_through_q", on_curve(c.curves[i], c.eckardt));
    } else {
        add("eckardt_is_x1", c.eckardt == c.points[0]);
        add("direction_differs_from_x1", !(c.direction == c.points[0]));
        if (!(c.direction == c.points[0])) {
            auto t = line_through(c.points[0], c.direction);
            for (size_t i = 0; i < c.curves.size(); ++i) {
                if (c.curves[i].degree == 1)
                    add(cn[i] + "_is_tangent_line", c.curves[i] == t);
                else
                    add(cn[i] + "_tangent_at_x1", tangent_at(c.curves[i], t, c.points[0]));
            }
        }
        if (c.variant == 'c') add("cubic_node_at_x7", is_node(c.curves[2], c.points[6]));
    }
    auto gp = general_position_check(c.points);
    add(gp.pass ? "general_position" : "general_position: " + gp.witness, gp.pass);
    return rep;
}

std::array<LClass, 4> lattice_classes(const Configuration& c) {
    std::array<LClass, 4> out;
    size_t m = 0;
    for (auto& f : c.curves) {
        LClass v(8, 0);
        v[0] = f.degree;
        for (int i = 0; i < 7; ++i) {
            if (!on_curve(f, c.points[i])) continue;
            v[i + 1] = is_zero(f.gradient(c.points[i])) ? -2 : -1;
        }
        out[m++] = v;
    }
    if (c.exceptional_member) {
        LClass e1(8, 0);
        e1[1] = 1;
        out[m++] = e1;
    }
    if (m != 4) throw ValidationError("configuration does not have four members");
    return out;
}

namespace {

nlohmann::json point_json(const PlanePoint& p) {
    return nlohmann::json::array({rat_str(p.c[0]), rat_str(p.c[1]), rat_str(p.c[2])});
}

PlanePoint point_from(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw ValidationError("point must be a triple");
    auto get = [](const nlohmann::json& x) {
        if (x.is_string()) return parse_rat(x.get<std::string>());
        if (x.is_number_integer()) return Rat(x.get<long>());
        throw ValidationError("coordinate must be a rational string or integer");
    };
    return PlanePoint::make(get(j[0]), get(j[1]), get(j[2]));
}

}  // namespace

nlohmann::json to_json(const Configuration& c) {
    nlohmann::json j;
    j["variant"] = std::string(1, c.variant);
    j["points"] = nlohmann::json::array();
    for (auto& p : c.points) j["points"].push_back(point_json(p));
    j["eckardt"] = point_json(c.eckardt);
    j["direction"] = point_json(c.direction);
    j["curves"] = nlohmann::json::array();
    for (auto& f : c.curves) {
        nlohmann::json cj;
        cj["degree"] = f.degree;
        cj["coefficients"] = nlohmann::json::array();
        for (auto& x : f.coeffs) cj["coefficients"].push_back(rat_str(x));
        j["curves"].push_back(cj);
    }
    j["exceptional_member"] = c.exceptional_member;
    return j;
}

Configuration config_from_json(const nlohmann::json& j) {
    try {
        Configuration c;
        auto v = j.at("variant").get<std::string>();
        if (v.size() != 1 || v[0] < 'a' || v[0] > 'c') throw ValidationError("variant must be a, b or c");
        c.variant = v[0];
        auto& pts = j.at("points");
        if (!pts.is_array() || pts.size() != 7) throw ValidationError("need exactly seven points");
        for (int i = 0; i < 7; ++i) c.points[i] = point_from(pts[i]);
        c.eckardt = point_from(j.at("eckardt"));
        c.direction = j.contains("direction") ? point_from(j.at("direction")) : c.eckardt;
        for (auto& cj : j.at("curves")) {
            std::vector<Rat> co;
            for (auto& x : cj.at("coefficients")) co.push_back(parse_rat(x.get<std::string>()));
            c.curves.push_back(PlaneCurve::make(cj.at("degree").get<int>(), co));
        }
        c.exceptional_member = j.value("exceptional_member", false);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed configuration: ") + e.what());
    }
}

nlohmann::json to_json(const ValidationReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass();
    j["checks"] = nlohmann::json::array();
    for (auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    return j;
}

}  // namespace cqs
