#include "cqs/tilting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cqs {

namespace {

constexpr long kInf = 1L << 60;

std::string bound_str(long v) { return v >= kInf ? "inf" : std::to_string(v); }

}  // namespace

std::string Interval::str() const {
    return exact() ? bound_str(lo) : "[" + bound_str(lo) + "," + bound_str(hi) + "]";
}

bool Interval::bounded() const { return hi < kInf; }

namespace {

constexpr int kLo = -8, kHi = 8, kSpan = kHi - kLo + 1;

using Dims = std::vector<Interval>;   // index d - kLo

// saturating at kInf
long sat_add(long a, long b) { return std::min(kInf, a + b); }
long sat_mul(long a, long b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kInf || b >= kInf || a > kInf / b) return kInf;
    return a * b;
}

Interval add(Interval a, Interval b) { return {sat_add(a.lo, b.lo), sat_add(a.hi, b.hi)}; }
Interval mul(Interval a, Interval b) { return {sat_mul(a.lo, b.lo), sat_mul(a.hi, b.hi)}; }
// dimension left in t after a map of unknown rank from s
Interval minus_rank(Interval t, Interval s) { return {std::max(0L, t.lo - s.hi), t.hi}; }
// exact rank, possibly imprecise: t - u with u <= t
Interval minus_exact(Interval t, Interval u) {
    return {std::max(0L, t.lo - u.hi), t.hi >= kInf ? kInf : std::max(0L, t.hi - u.lo)};
}

// node = 2*idx for the original object, 2*idx+1 for the constructed one
struct Engine {
    size_t n;
    std::vector<std::vector<std::map<int, long>>> base;
    std::vector<std::vector<std::pair<size_t, Interval>>> terms;   // terms[l]
    std::vector<bool> built;
    std::map<std::pair<int, int>, Dims> memo;

    int node_of(size_t idx) const { return built[idx] ? static_cast<int>(2 * idx + 1) : static_cast<int>(2 * idx); }

    Interval at(const Dims& v, int d) const {
        if (d < kLo || d > kHi) return {0, 0};
        return v[d - kLo];
    }

    Dims ext_q(int a_node, size_t l, bool q_first) {
        Dims out(kSpan);
        for (auto& [m, r] : terms[l]) {
            int xm = node_of(m);
            const Dims& e = q_first ? ext(xm, a_node) : ext(a_node, xm);
            for (int i = 0; i < kSpan; ++i) out[i] = add(out[i], mul(r, e[i]));
        }
        return out;
    }

    const Dims& ext(int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Dims out(kSpan);
        bool ca = a % 2 == 1, cb = b % 2 == 1;
        size_t ia = a / 2, ib = b / 2;
        if (!ca && !cb) {
            for (auto [d, v] : base[ia][ib]) {
                if (d < kLo || d > kHi) throw InternalError("degree out of tracked range");
                out[d - kLo] = {v, v};
            }
        } else if (cb && (!ca || ib > ia)) {
            // E_l -> X_l -> Q -> E_l[1], apply Hom(A, -)
            size_t l = ib;
            int e = static_cast<int>(2 * l);
            bool pinned = false;
            for (auto& [m, r] : terms[l])
                if (node_of(m) == a) pinned = true;
            Dims ae = ext(a, e);
            Dims aq = ext_q(a, l, false);
            for (int d = kLo; d <= kHi; ++d) {
                Interval t1 = (pinned && d == 1) ? Interval{0, 0} : minus_rank(at(ae, d), at(aq, d - 1));
                Interval t2 = (pinned && d == 0) ? minus_exact(at(aq, 0), at(ae, 1)) : minus_rank(at(aq, d), at(ae, d + 1));
                out[d - kLo] = add(t1, t2);
            }
        } else {
            // apply Hom(-, B) to E_l -> X_l -> Q
            size_t l = ia;
            int e = static_cast<int>(2 * l);
            Dims eb = ext(e, b);
            Dims qb = ext_q(b, l, true);
            for (int d = kLo; d <= kHi; ++d) {
                Interval t1 = minus_rank(at(qb, d), at(eb, d - 1));
                Interval t2 = minus_rank(at(eb, d), at(qb, d + 1));
                out[d - kLo] = add(t1, t2);
            }
        }
        if (out.front().hi != 0 || out.back().hi != 0) throw InternalError("Ext escaped the tracked degree range");
        return memo[key] = out;
    }
};

}  // namespace

TiltingReport universal_extension_tilting(const Surface& s, const ExceptionalCollection& c) {
    size_t n = c.objects.size();
    Engine g;
    g.n = n;
    g.base.assign(n, std::vector<std::map<int, long>>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto h = hom_dims(s, c.objects[a], c.objects[b]);
            if (!h.known) throw ValidationError("unknown dims for (" + c.objects[a].label() + ", " + c.objects[b].label() + ")");
            bool ok = a < b ? h.only_degrees(0, 1) : (a == b ? h.dims == std::map<int, long>{{0, 1}} : h.dims.empty());
            if (!ok)
                throw ValidationError("collection is not exceptional with degrees 0 and 1 at (" + c.objects[a].label() +
                                      ", " + c.objects[b].label() + "): " + h.str());
            g.base[a][b] = h.dims;
        }
    g.terms.assign(n, {});
    g.built.assign(n, false);

    TiltingReport rep;
    for (size_t l = 0; l < n; ++l) {
        for (size_t m = 0; m < l; ++m) {
            Interval r = g.at(g.ext(g.node_of(m), static_cast<int>(2 * l)), 1);
            if (r.hi == 0) continue;
            g.terms[l].push_back({m, r});
            rep.steps.push_back({m, l, r});
        }
        if (!g.terms[l].empty()) g.built[l] = true;
    }

    std::vector<std::vector<Interval>> coeff(n, std::vector<Interval>(n));
    for (size_t l = 0; l < n; ++l) {
        coeff[l][l] = {1, 1};
        for (auto& [m, r] : g.terms[l])
            for (size_t q = 0; q < n; ++q) coeff[l][q] = add(coeff[l][q], mul(r, coeff[m][q]));
    }

    for (size_t l = 0; l < n; ++l) {
        Summand sm;
        sm.index = l;
        const auto& o = c.objects[l];
        std::ostringstream prov;
        if (g.terms[l].empty()) {
            sm.label = o.label();
            prov << o.label();
        } else {
            sm.label = "X(" + o.label() + ")";
            prov << "ext(" << o.label() << ";";
            for (auto& [m, r] : g.terms[l]) prov << " " << rep.summands[m].label << "^" << r.str();
            prov << ")";
        }
        sm.provenance = prov.str();
        sm.coefficients = coeff[l];
        bool exact = true, surface_side = true;
        for (size_t q = 0; q < n; ++q) {
            if (!coeff[l][q].exact()) exact = false;
            if (coeff[l][q].hi != 0 && (c.objects[q].is_stack_simple() || c.objects[q].phi)) surface_side = false;
        }
        if (exact && surface_side) {
            KClass k;
            k.c1.assign(s.basis.rank(), 0);
            for (size_t q = 0; q < n; ++q)
                if (coeff[l][q].hi) k = k + kclass(s, c.objects[q]).scaled(coeff[l][q].lo);
            sm.kclass = k;
        }
        rep.summands.push_back(sm);
    }

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Dims& e = g.ext(g.node_of(a), g.node_of(b));
            bool ok = true;
            for (int d = kLo; d <= kHi; ++d) {
                if (d == 0) continue;
                Interval v = g.at(e, d);
                if (v.hi != 0) {
                    ok = false;
                    rep.undetermined.push_back({a, b, d, v});
                }
            }
            if (ok) ++rep.certified_pairs;
        }
    return rep;
}

}  // namespace cqs
