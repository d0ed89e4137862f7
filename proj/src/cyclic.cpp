#include "cqs/cyclic.hpp"

#include <numeric>

namespace cqs {

long mod(long x, long r) {
    long m = x % r;
    return m < 0 ? m + r : m;
}

CyclicType CyclicType::make(long r, long a) {
    if (r < 2) throw ValidationError("r must be at least 2 (got " + std::to_string(r) + ")");
    if (a < 1 || a >= r)
        throw ValidationError("a must satisfy 1 <= a < r (got a=" + std::to_string(a) + ", r=" +
                              std::to_string(r) + ")");
    if (std::gcd(r, a) != 1)
        throw ValidationError("r and a must be coprime (gcd(" + std::to_string(r) + "," +
                              std::to_string(a) + ")=" + std::to_string(std::gcd(r, a)) + ")");
    return CyclicType{r, a};
}

long CyclicType::n() const { return static_cast<long>(hj_expand(*this).size()); }

std::string CyclicType::str() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + ")";
}

std::vector<long> hj_expand(const CyclicType& t) {
    std::vector<long> out;
    long x = t.r, y = t.a;
    while (y > 0) {
        long alpha = (x + y - 1) / y;
        out.push_back(alpha);
        long z = alpha * y - x;
        x = y;
        y = z;
    }
    return out;
}

Rat cf_value(const std::vector<long>& alphas) {
    if (alphas.empty()) throw ValidationError("empty continued fraction");
    Rat v = alphas.back();
    for (size_t t = alphas.size() - 1; t-- > 0;) v = Rat(alphas[t]) - 1 / v;
    return v;
}

namespace {

Series forward(const std::vector<long>& alpha, long v0, long v1) {
    Series s{v0, v1};
    for (size_t t = 1; t <= alpha.size(); ++t) s.push_back(alpha[t - 1] * s[t] - s[t - 1]);
    return s;
}

}  // namespace

Series i_series(const CyclicType& t) { return forward(hj_expand(t), t.r, t.a); }

Series j_series(const CyclicType& t) { return forward(hj_expand(t), 0, 1); }

Series h_series(const CyclicType& t, long s) {
    auto alpha = hj_expand(t);
    long n = static_cast<long>(alpha.size());
    if (s < 0 || s > n + 1)
        throw ValidationError("H-series index s must lie in 0.." + std::to_string(n + 1));
    // alpha_t is alpha[t-1]
    Series h(n + 2, 0);
    if (s >= 1) h[s - 1] = 1;
    if (s <= n) h[s + 1] = 1;
    for (long u = s - 2; u >= 0; --u) h[u] = alpha[u] * h[u + 1] - h[u + 2];
    for (long u = s + 2; u <= n + 1; ++u) h[u] = alpha[u - 2] * h[u - 1] - h[u - 2];
    return h;
}

CyclicType inverse_weight(const CyclicType& t) {
    for (long b = 1; b < t.r; ++b)
        if (mod(t.a * b, t.r) == 1) return CyclicType{t.r, b};
    throw InternalError("no inverse weight for " + t.str());
}

}  // namespace cqs
