#include "cqs/dp2.hpp"

#include "cqs/lattice_kernels.hpp"
#include "cqs/num.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cqs {

int lat_dot(const LClass& u, const LClass& v) {
    int s = u[0] * v[0];
    for (size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
    return s;
}

LClass canonical_class(int n) {
    LClass k(n + 1, 1);
    k[0] = -3;
    return k;
}

bool is_exceptional(const LClass& v) {
    return lat_dot(v, v) == -1 && lat_dot(v, canonical_class(static_cast<int>(v.size()) - 1)) == -1;
}

std::vector<LClass> exceptional_vectors(int n) {
    if (n < 1 || n > 8) throw ValidationError("lattice rank must be 1..8");
    // sum x = 1 - 3d, sum x^2 = d^2 + 1; Cauchy-Schwarz bounds d
    std::vector<LClass> out;
    for (int d = -10; d <= 10; ++d) {
        long s = 1 - 3 * d, q = long(d) * d + 1;
        if (s * s > long(n) * q) continue;
        LClass v(n + 1, 0);
        v[0] = d;
        std::function<void(int, long, long)> rec = [&](int i, long rs, long rq) {
            if (i == n + 1) {
                if (rs == 0 && rq == 0) out.push_back(v);
                return;
            }
            long left = n + 1 - i;
            if (rs * rs > left * rq) return;
            for (long x = -10; x <= 10; ++x) {
                if (x * x > rq) continue;
                v[i] = static_cast<int>(x);
                rec(i + 1, rs - x, rq - x * x);
            }
            v[i] = 0;
        };
        rec(1, s, q);
    }
    std::sort(out.begin(), out.end(), [](const LClass& a, const LClass& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a > b;
    });
    return out;
}

LClass dual(const LClass& v) {
    if (v.size() != 8 || !is_exceptional(v)) throw ValidationError("dual needs an exceptional vector of I^{1,7}");
    LClass w(8);
    auto k = canonical_class(7);
    for (int i = 0; i < 8; ++i) w[i] = -k[i] - v[i];
    return w;
}

int Dp2Data::index_of(const LClass& v) const {
    auto it = std::find(vecs.begin(), vecs.end(), v);
    return it == vecs.end() ? -1 : static_cast<int>(it - vecs.begin());
}

long Dp2Data::dual_pairs() const {
    long c = 0;
    for (size_t i = 0; i < vecs.size(); ++i)
        if (dual_of[i] > static_cast<int>(i)) ++c;
    return c;
}

namespace {

Dp2Data build() {
    Dp2Data d;
    d.vecs = exceptional_vectors(7);
    size_t m = d.vecs.size();
    auto g = gram(PackedVectors::pack(d.vecs));
    d.gram.assign(g.begin(), g.end());
    for (size_t i = 0; i < m; ++i) d.dual_of.push_back(d.index_of(dual(d.vecs[i])));
    for (int a = 0; a < int(m); ++a)
        for (int b = a + 1; b < int(m); ++b) {
            if (d.dot(a, b) != 1) continue;
            for (int c = b + 1; c < int(m); ++c) {
                if (d.dot(a, c) != 1 || d.dot(b, c) != 1) continue;
                for (int e = c + 1; e < int(m); ++e)
                    if (d.dot(a, e) == 1 && d.dot(b, e) == 1 && d.dot(c, e) == 1)
                        d.cliques.push_back({a, b, c, e});
            }
        }
    ExcSet cur{};
    std::function<void(int, int)> rec = [&](int depth, int start) {
        if (depth == 7) {
            d.exc_sets.push_back(cur);
            return;
        }
        for (int v = start; v < int(m); ++v) {
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) ok = d.dot(cur[j], v) == 0;
            if (!ok) continue;
            cur[depth] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);
    return d;
}

}  // namespace

const Dp2Data& dp2_data() {
    static const Dp2Data d = build();
    return d;
}

int max_intersection_one_subset(const Dp2Data& d) {
    int m = static_cast<int>(d.vecs.size()), best = 0;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        best = std::max(best, static_cast<int>(cur.size()));
        for (int v = start; v < m; ++v) {
            bool ok = true;
            for (int u : cur) ok = ok && d.dot(u, v) == 1;
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return best;
}

std::vector<int> disjoint_exc_sets(const Dp2Data& d, const Clique& c, bool avoid_dual) {
    std::vector<int> avoid(c.begin(), c.end());
    if (avoid_dual)
        for (int x : c) avoid.push_back(d.dual_of[x]);
    std::vector<int> out;
    for (size_t s = 0; s < d.exc_sets.size(); ++s) {
        bool ok = true;
        for (int x : d.exc_sets[s])
            if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) ok = false;
        if (ok) out.push_back(static_cast<int>(s));
    }
    return out;
}

std::array<int, 4> classify_clique_images(const Dp2Data&, const std::array<LClass, 4>& c,
                                          const std::array<LClass, 7>& s) {
    // H' = (-K + sum of the set) / 3
    auto k = canonical_class(7);
    LClass h(8);
    for (int i = 0; i < 8; ++i) {
        int x = -k[i];
        for (auto& l : s) x += l[i];
        if (x % 3) throw InternalError("blow-down class is not integral");
        h[i] = x / 3;
    }
    if (lat_dot(h, h) != 1) throw InternalError("blow-down class does not square to 1");
    std::array<int, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = lat_dot(c[i], h);
    std::sort(p.begin(), p.end());
    return p;
}

std::array<int, 4> classify_clique_images(const Dp2Data& d, const Clique& c, const ExcSet& s) {
    std::array<LClass, 4> cc;
    std::array<LClass, 7> ss;
    for (int i = 0; i < 4; ++i) cc[i] = d.vecs[c[i]];
    for (int i = 0; i < 7; ++i) ss[i] = d.vecs[s[i]];
    return classify_clique_images(d, cc, ss);
}

bool allowed_pattern(const std::array<int, 4>& p) {
    static const std::array<std::array<int, 4>, 4> ok{
        {{1, 1, 2, 2}, {0, 2, 2, 2}, {1, 1, 1, 3}, {0, 1, 2, 3}}};
    return std::find(ok.begin(), ok.end(), p) != ok.end();
}

std::string pattern_str(const std::array<int, 4>& p) {
    std::ostringstream os;
    os << "{" << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << "}";
    return os.str();
}

bool is_clique(const std::array<LClass, 4>& c) {
    for (int i = 0; i < 4; ++i) {
        if (!is_exceptional(c[i])) return false;
        for (int j = i + 1; j < 4; ++j)
            if (lat_dot(c[i], c[j]) != 1) return false;
    }
    return true;
}

}  // namespace cqs
