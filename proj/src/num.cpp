#include "cqs/num.hpp"

#include <utility>

namespace cqs {

long to_long(const Int& x) {
    if (!x.fits_slong_p())
        throw InternalError("integer does not fit in a machine word: " + x.get_str());
    return x.get_si();
}

Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw ValidationError("malformed rational '" + s + "'");
    q.canonicalize();
    return q;
}

std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& b) {
    size_t cols = m.empty() ? 0 : m[0].size();
    RatMatrix aug = m;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    if (piv.size() != cols) return std::nullopt;
    RatVector x(cols);
    for (size_t i = 0; i < cols; ++i) x[piv[i]] = aug[i][cols];
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    std::vector<RatVector> basis;
    if (m.empty()) return basis;
    size_t cols = m[0].size();
    RatMatrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RatVector v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det(RatMatrix m) {
    size_t n = m.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

// Bareiss fraction-free elimination
Int det_int(const std::vector<std::vector<Int>>& in) {
    auto m = in;
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace cqs
