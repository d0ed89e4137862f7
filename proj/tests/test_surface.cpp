#include "doctest.h"

#include "cqs/surface.hpp"

using namespace cqs;

namespace {

long dot(const Surface& s, int a, int b) { return pic_dot(s.curve[a], s.curve[b]); }

// expected C.C' for the configuration, independent of the basis encoding
long expected_dot(const Surface& s, int a, int b) {
    long k = s.k();
    auto chain_pos = [&](int id, int& i, int& j) {
        for (i = 1; i <= 4; ++i)
            for (j = 0; j <= k; ++j)
                if (s.C(i, j) == id) return true;
        return false;
    };
    int ia, ja, ib, jb;
    bool ca = chain_pos(a, ia, ja), cb = chain_pos(b, ib, jb);
    if (a == b) {
        if (a == s.F()) return -(4 * k + 1);
        if (ca) return ja == 0 ? -3 : (ja == k ? -1 : -2);
        return -1;
    }
    if (ca && cb) return ia == ib && (ja - jb == 1 || jb - ja == 1) ? 1 : 0;
    if (ca && b == s.F()) return ja == k ? 1 : 0;
    if (cb && a == s.F()) return jb == k ? 1 : 0;
    for (int t = 1; t <= 7; ++t) {
        if (ca && ja == 0 && b == s.L(t)) return s.A[ia - 1][t - 1];
        if (cb && jb == 0 && a == s.L(t)) return s.A[ib - 1][t - 1];
    }
    return 0;
}

}  // namespace

TEST_CASE("curve configuration invariants for k up to 10") {
    for (long k = 1; k <= 10; ++k) {
        CAPTURE(k);
        auto s = build_surface(k);
        CHECK(s.basis.rank() == 9 + 4 * k);
        for (int a = 0; a < s.curve_count(); ++a) {
            long kc = pic_dot(s.K, s.curve[a]);
            CHECK(kc == -2 - dot(s, a, a));   // rational curves
            for (int b = 0; b < s.curve_count(); ++b) {
                CAPTURE(s.label[a]);
                CAPTURE(s.label[b]);
                CHECK(dot(s, a, b) == expected_dot(s, a, b));
            }
        }
        CHECK(pic_dot(s.K, s.curve[s.F()]) == 4 * k - 1);
        CHECK(pic_dot(s.K, s.K) == 1 - 4 * k);
        CHECK(pic_dot(s.D, s.D) == -1);
        CHECK(pic_dot(s.K, s.D) == -1);
        CHECK(-(pic_dot(s.D, s.D) + pic_dot(s.K, s.D)) / 2 == 1);
        for (int i = 1; i <= 4; ++i) CHECK(pic_dot(s.D, s.curve[s.C(i, k)]) == 0);
    }
}

TEST_CASE("incidence matrix A") {
    auto s = build_surface(2);
    std::array<std::array<int, 7>, 4> a{{{1, 1, 0, 0, 0, 0, 0},
                                         {0, 0, 1, 1, 0, 0, 0},
                                         {1, 0, 1, 0, 1, 1, 1},
                                         {0, 1, 0, 1, 1, 1, 1}}};
    CHECK(s.A == a);
    for (int i = 1; i <= 4; ++i)
        for (int t = 1; t <= 7; ++t) CHECK(dot(s, s.C(i, 0), s.L(t)) == a[i - 1][t - 1]);
}

TEST_CASE("discrepancies: closed form against the linear solve") {
    auto k2 = discrepancies_closed_form(2);
    CHECK(k2.d == make_rat(-7, 9));
    CHECK(k2.dj == std::vector<Rat>{make_rat(-2, 5), make_rat(-1, 5)});
    for (long k = 1; k <= 10; ++k) {
        CAPTURE(k);
        auto a = discrepancies_closed_form(k);
        auto b = discrepancies_solved(build_surface(k));
        CHECK(a.d == b.d);
        CHECK(a.dj == b.dj);
    }
}

TEST_CASE("ranks") {
    auto r = ranks(3);
    CHECK(r.picard == 21);
    CHECK(r.k_theory == 23);
    CHECK(r.rho_X == 8);
    CHECK(r.picard - 4 * 3 - 1 == r.rho_X);
}

TEST_CASE("Euler pairing on line bundles matches Riemann-Roch") {
    auto s = build_surface(2);
    KClass o{1, PicClass(s.basis.rank(), 0), 0};
    for (long a = -3; a <= 3; ++a) {
        KClass la{1, pic_add(o.c1, s.H, a), Rat(a * a, 2)};
        la.ch2.canonicalize();
        CHECK(euler_pairing(s, o, la) == (a + 1) * (a + 2) / 2);
        CHECK(euler_pairing(s, la, la) == 1);
    }
    KClass t{2, s.H, make_rat(-1, 2)};
    CHECK(euler_pairing(s, o, t) == 3);
    CHECK(euler_pairing(s, t, t) == 1);
    CHECK(euler_pairing(s, t, o) == 0);
}

TEST_CASE("global images agree with transported local images") {
    for (long k = 1; k <= 6; ++k) {
        CAPTURE(k);
        auto s = build_surface(k);
        for (long j = 0; j <= 4 * k; ++j) CHECK(psi_e(s, j) == psi_e_transported(s, j));
        for (int i = 1; i <= 4; ++i)
            for (long j = 0; j <= 2 * k; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(psi_ei(s, i, j) == psi_ei_transported(s, i, j));
            }
    }
    auto s = build_surface(2);
    CHECK(psi_e(s, 7).str(s) == "O_{F}(-9)[1]");
    CHECK(psi_e(s, 8).str(s) == "O_{F}(-8)");
    CHECK(psi_e(s, 6).zero);
    CHECK(psi_ei(s, 3, 4).str(s) == "O_{C3,0}(-2)");
    CHECK(psi_ei(s, 3, 3).str(s) == "O_{C3,1}(-1)");
}

TEST_CASE("torsion classes have the expected Euler characteristic") {
    auto s = build_surface(3);
    KClass o{1, PicClass(s.basis.rank(), 0), 0};
    auto f = kclass_of(s, psi_e(s, 12));
    CHECK(euler_pairing(s, o, f) == -11);
    auto f1 = kclass_of(s, psi_e(s, 11));
    CHECK(euler_pairing(s, o, f1) == 12);   // shifted O_F(-13)
}
