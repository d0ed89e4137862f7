#include "doctest.h"

#include "cqs/resolution.hpp"

#include <functional>
#include <numeric>

using namespace cqs;

namespace {

SymbolicSheaf sheaf(std::vector<long> supp, std::vector<long> deg, int shift) {
    SymbolicSheaf s;
    s.zero = false;
    s.support = std::move(supp);
    s.degrees = std::move(deg);
    s.shift = shift;
    return s;
}

// smallest Z >= 1 with Z.E_t <= 0, by brute force over coefficients <= 3
std::vector<long> brute_fundamental(const Chain& c) {
    long n = c.n();
    std::vector<long> z(n, 1), best;
    std::function<void(long)> rec = [&](long p) {
        if (p == n) {
            for (long t = 1; t <= n; ++t) {
                long v = 0;
                for (long u = 1; u <= n; ++u) v += z[u - 1] * c.dot(u, t);
                if (v > 0) return;
            }
            if (best.empty()) best = z;
            else
                for (long u = 0; u < n; ++u) best[u] = std::min(best[u], z[u]);
            return;
        }
        for (long v = 1; v <= 3; ++v) {
            z[p] = v;
            rec(p + 1);
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST_CASE("chains") {
    CHECK(chain(CyclicType::make(5, 3)).self_intersections() == std::vector<long>{-2, -3});
    CHECK(chain(CyclicType::make(9, 4)).self_intersections() == std::vector<long>{-3, -2, -2, -2});
    CHECK(chain(CyclicType::make(7, 1)).self_intersections() == std::vector<long>{-7});
}

TEST_CASE("fundamental cycle") {
    CHECK(fundamental_cycle(chain(CyclicType::make(7, 3))) == std::vector<long>{1, 1, 1});
    CHECK(fundamental_cycle(chain(CyclicType::make(6, 1))) == std::vector<long>{1});
    for (long r = 2; r <= 50; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto c = chain(CyclicType::make(r, a));
            if (c.n() > 7) continue;
            auto z = fundamental_cycle(c);
            REQUIRE(z == std::vector<long>(c.n(), 1));
            REQUIRE(brute_fundamental(c) == z);
        }
}

TEST_CASE("psi simple examples") {
    for (long n = 3; n <= 9; ++n) {
        auto t = CyclicType::make(n, 1);
        CHECK(psi_simple(t, n - 2) == sheaf({1}, {-n}, 1));
        CHECK(psi_simple(t, n - 1) == sheaf({1}, {-n + 1}, 0));
    }
    for (long k = 1; k <= 6; ++k) {
        auto t = CyclicType::make(2 * k + 1, k);
        auto s = psi_simple(t, k);
        CHECK(!s.zero);
        CHECK(s.shift == 1);
        CHECK(s.support == std::vector<long>(k, 1));
    }
    auto t = CyclicType::make(5, 3);
    CHECK(psi_simple(t, 1) == sheaf({1, 1}, {-1, -2}, 1));
    CHECK(psi_simple(t, 2) == sheaf({0, 1}, {0, -2}, 0));
    CHECK(psi_simple(t, 4) == sheaf({1, 0}, {-1, 0}, 0));
    CHECK(psi_simple(t, 0).zero);
    CHECK(psi_simple(t, 3).zero);
}

TEST_CASE("wunram") {
    auto t = CyclicType::make(5, 2);
    CHECK(wunram_decomposition(t, 4) == std::vector<long>{2, 0});
    CHECK(wunram_decomposition(t, 3) == std::vector<long>{1, 1});
    for (long r = 2; r <= 60; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto t2 = CyclicType::make(r, a);
            auto is = i_series(t2);
            long n = t2.n();
            REQUIRE(wunram_decomposition(t2, 0) == std::vector<long>(n, 0));
            for (long u = 1; u <= n; ++u) {
                std::vector<long> e(n, 0);
                e[u - 1] = 1;
                REQUIRE(wunram_decomposition(t2, is[u]) == e);
            }
            for (long l = 0; l < r; ++l) {
                auto d = wunram_decomposition(t2, l);
                long sum = 0;
                for (long u = 1; u <= n; ++u) sum += d[u - 1] * is[u];
                REQUIRE(sum == l);
                for (long t0 = 0; t0 <= n; ++t0) {
                    long tail = 0;
                    for (long u = t0 + 1; u <= n; ++u) tail += d[u - 1] * is[u];
                    REQUIRE(tail < is[t0]);
                }
            }
        }
}

TEST_CASE("worked example 1/5(1,2)") {
    auto t = CyclicType::make(5, 2);
    auto dd = divisor_data(t);
    CHECK(dd.pullback_x == Cycle{0, 1, 3, 5});
    CHECK(dd.pullback_y == Cycle{5, 2, 1, 0});
    CHECK(dd.D[0].first == Cycle{1, 0, 0, 0});
    CHECK(dd.D[0].second == Cycle{0, 0, 1, 2});
    CHECK(dd.D[1].first == Cycle{3, 1, 0, 0});
    CHECK(dd.D[1].second == Cycle{0, 0, 0, 1});
    auto sd = section_divisors(t);
    CHECK(sd.x[0] == Cycle{0, 0, 0, 1});
    CHECK(sd.x[1] == Cycle{0, 0, 1, 1});
    CHECK(sd.x[4] == Cycle{0, 1, 1, 1});
    CHECK(sd.y[0] == Cycle{1, 0, 0, 0});
    CHECK(sd.y[3] == Cycle{1, 1, 1, 0});
    CHECK(psi_toric_oracle(t, 2) == sheaf({1, 1}, {-2, -1}, 1));
    CHECK(psi_toric_oracle(t, 3) == sheaf({0, 1}, {0, -1}, 0));
    CHECK(psi_toric_oracle(t, 0).zero);
}

TEST_CASE("divisor identities up to r=200") {
    for (long r = 2; r <= 200; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto t = CyclicType::make(r, a);
            auto c = chain(t);
            long n = c.n();
            auto dd = divisor_data(t);
            for (long s = 1; s <= n; ++s)
                for (long u = 1; u <= n; ++u) {
                    REQUIRE(pair_with(c, dd.D[s - 1].first, u) == (s == u));
                    REQUIRE(pair_with(c, dd.D[s - 1].second, u) == (s == u));
                }
            long nonzero = 0;
            for (long i = 0; i < r; ++i) nonzero += !psi_simple(t, i).zero;
            REQUIRE(nonzero == n + 1);
        }
}

TEST_CASE("oracle agrees with formula up to r=50") {
    for (long r = 2; r <= 50; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto t = CyclicType::make(r, a);
            auto sd = section_divisors(t);
            auto dd = divisor_data(t);
            Cycle sx(t.n() + 2, 0), sy(t.n() + 2, 0);
            for (long l = 0; l < r; ++l)
                for (long p = 0; p <= t.n() + 1; ++p) {
                    sx[p] += sd.x[l][p];
                    sy[p] += sd.y[l][p];
                }
            REQUIRE(sx == dd.pullback_x);
            REQUIRE(sy == dd.pullback_y);
            for (long i = 0; i < r; ++i) {
                INFO(t.str(), " i=", i);
                REQUIRE(psi_toric_oracle(t, i, sd) == psi_simple(t, i));
            }
        }
}
