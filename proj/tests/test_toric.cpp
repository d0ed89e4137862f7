#include "doctest.h"

#include "cqs/toric.hpp"

#include <numeric>
#include <random>

using namespace cqs;

namespace {

// Independent route: Hermite form by row operations.
std::pair<long, long> hermite_oracle(LVec u, LVec w) {
    long m[2][2] = {{w[0], u[0]}, {w[1], u[1]}};
    // Euclid on the first column
    while (m[1][0] != 0) {
        long q = m[0][0] / m[1][0];
        for (int j = 0; j < 2; ++j) m[0][j] -= q * m[1][j];
        for (int j = 0; j < 2; ++j) std::swap(m[0][j], m[1][j]);
    }
    if (m[0][0] < 0)
        for (int j = 0; j < 2; ++j) m[0][j] = -m[0][j];
    if (m[1][1] < 0) m[1][1] = -m[1][1];
    long r = m[1][1];
    if (r == 1) return {1, 0};
    long a = mod(-m[0][1], r);
    long ai = inverse_weight(CyclicType{r, a}).a;
    return {r, std::min(a, ai)};
}

}  // namespace

TEST_CASE("normal form examples") {
    auto nf = normal_form_2d({7, -3}, {0, 1});
    CHECK(nf.r == 7);
    CHECK(nf.a == 3);
    CHECK(nf.a_inv == 5);
    auto sm = normal_form_2d({1, 0}, {0, 1});
    CHECK(sm.r == 1);
    CHECK(sm.a == 0);
    auto n2 = normal_form_2d({1, 2}, {3, 4});
    CHECK(n2.r == 2);
    CHECK(n2.a == 1);
    CHECK(hermite_oracle({1, 2}, {3, 4}) == std::pair<long, long>{2, 1});
    CHECK_THROWS_AS(normal_form_2d({1, 2}, {2, 4}), ValidationError);
}

TEST_CASE("normal form basis change") {
    LVec u{5, 3}, w{2, 1};
    auto nf = normal_form_2d(u, w);
    auto& g = nf.basis_change;
    CHECK(g[0][0] * w[0] + g[0][1] * w[1] == 0);
    CHECK(g[1][0] * w[0] + g[1][1] * w[1] == 1);
    CHECK(g[0][0] * u[0] + g[0][1] * u[1] == nf.r);
    CHECK(g[1][0] * u[0] + g[1][1] * u[1] == -nf.a_raw);
}

TEST_CASE("normal form is a lattice invariant") {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<long> ent(-10, 10);
    long tried = 0;
    for (long r = 2; r <= 30; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            LVec u{r, -a}, w{0, 1};
            long want = std::min(a, inverse_weight(CyclicType{r, a}).a);
            for (int rep = 0; rep < 5; ++rep) {
                long p, q, s, t;
                do {
                    p = ent(rng), q = ent(rng), s = ent(rng), t = ent(rng);
                } while (std::abs(p * t - q * s) != 1);
                LVec gu{p * u[0] + q * u[1], s * u[0] + t * u[1]};
                LVec gw{p * w[0] + q * w[1], s * w[0] + t * w[1]};
                auto nf = normal_form_2d(gu, gw);
                REQUIRE(nf.r == r);
                REQUIRE(nf.a == want);
                REQUIRE(hermite_oracle(gu, gw) == std::pair<long, long>{r, want});
                ++tried;
            }
        }
    CHECK(tried > 0);
}

TEST_CASE("star subdivision of a smooth cone") {
    auto f = Fan::from_maximal(2, {{1, 0}, {0, 1}}, {{0, 1}});
    auto g = star_subdivide(f, {1, 1});
    auto mx = g.maximal_cones();
    REQUIRE(mx.size() == 2);
    for (auto& c : mx) CHECK(std::abs(det2(g.rays[c[0]], g.rays[c[1]])) == 1);
    CHECK(is_fan_on_box(g, 4));
    CHECK(same_support_on_box(f, g, 4));
    CHECK_THROWS_AS(star_subdivide(f, {-1, 1}), ValidationError);
    CHECK_THROWS_AS(star_subdivide(f, {2, 2}), ValidationError);
}

TEST_CASE("star subdivision of 1/5(1,2) at rho_1") {
    auto f = Fan::from_maximal(2, {{0, 1}, {5, -2}}, {{0, 1}});
    LVec rho1{1, 0};   // (rho_{n+1} + i_1 rho_0)/i_0
    auto g = star_subdivide(f, rho1);
    auto mx = g.maximal_cones();
    REQUIRE(mx.size() == 2);
    std::vector<std::pair<long, long>> forms;
    for (auto& c : mx) {
        auto nf = normal_form_2d(g.rays[c[0]], g.rays[c[1]]);
        forms.push_back({nf.r, nf.a});
    }
    std::sort(forms.begin(), forms.end());
    CHECK(forms == std::vector<std::pair<long, long>>{{1, 0}, {2, 1}});
    CHECK(is_fan_on_box(g, 6));
    CHECK(same_support_on_box(f, g, 6));
}

TEST_CASE("weighted blow-up of a 3d cone") {
    long k = 2;
    LVec r1{k, k, 4 * k + 1}, r2{1, 0, 0}, r3{0, 1, 0};
    auto f = Fan::from_maximal(3, {r1, r2, r3}, {{0, 1, 2}});
    LVec v{1, 1, 4};
    auto g = star_subdivide(f, v);
    auto mx = g.maximal_cones();
    CHECK(mx.size() == 3);
    for (auto& c : mx) CHECK(std::find(c.begin(), c.end(), g.ray_index(v)) != c.end());
    CHECK(is_fan_on_box(g, 3));
    CHECK(same_support_on_box(f, g, 3));
}

TEST_CASE("resolve_2d") {
    auto rho = resolve_2d(CyclicType::make(5, 2));
    CHECK(rho == std::vector<LVec>{{0, 1}, {1, 0}, {3, -1}, {5, -2}});
    auto r71 = resolve_2d(CyclicType::make(7, 1));
    CHECK(r71.size() == 3);
    CHECK(r71[0][0] + r71[2][0] == 7 * r71[1][0]);
    CHECK(r71[0][1] + r71[2][1] == 7 * r71[1][1]);
    for (long r = 2; r <= 60; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto t = CyclicType::make(r, a);
            auto al = hj_expand(t);
            auto rh = resolve_2d(t);
            long n = static_cast<long>(al.size());
            for (long u = 1; u <= n; ++u)
                for (int c = 0; c < 2; ++c)
                    REQUIRE(rh[u - 1][c] + rh[u + 1][c] == al[u - 1] * rh[u][c]);
            for (long u = 0; u <= n; ++u) {
                auto nf = normal_form_2d(rh[u], rh[u + 1]);
                REQUIRE(nf.r == 1);
            }
        }
}

TEST_CASE("jk fan verification") {
    auto r1 = jk_fan_verify(1);
    CHECK(r1.all_pass());
    CHECK(r1.v == LVec{1, 1, 4});
    CHECK(r1.vs[0] == LVec{0, 0, 1});
    auto r2 = jk_fan_verify(2);
    CHECK(r2.all_pass());
    CHECK(r2.v == LVec{1, 1, 4});
    CHECK(r2.vs[0] == LVec{0, 0, 1});
    CHECK(r2.vs[1] == LVec{1, 1, 5});
    for (long k = 1; k <= 20; ++k) {
        auto rep = jk_fan_verify(k);
        INFO("k=", k);
        for (auto& c : rep.checks) {
            INFO(c.name);
            CHECK(c.pass);
        }
        CHECK(rep.checks.size() == 9);
    }
}
