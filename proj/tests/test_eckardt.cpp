#include "doctest.h"

#include "cqs/eckardt.hpp"

#include <fstream>

using namespace cqs;

#ifndef CQS_TEST_DATA
#define CQS_TEST_DATA "tests/data"
#endif

namespace {

PlanePoint pt(long x, long y, long z) { return PlanePoint::make(x, y, z); }

Configuration load(const std::string& name) {
    std::ifstream in(std::string(CQS_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    return config_from_json(nlohmann::json::parse(in));
}

}  // namespace

TEST_CASE("general position check") {
    std::array<PlanePoint, 7> pts{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1),
                                  pt(1, 2, 3), pt(2, -1, 5), pt(-3, 1, 2)};
    CHECK(general_position_check(pts).pass);
    auto col = pts;
    col[3] = pt(1, 1, 0);
    auto g = general_position_check(col);
    CHECK(!g.pass);
    CHECK(g.witness == "collinear x1 x2 x4");
    auto dup = pts;
    dup[6] = dup[2];
    CHECK(!general_position_check(dup).pass);
    CHECK(general_position_check(dup).witness.find("coincident") == 0);
    // six points on the conic xy = z^2
    std::array<PlanePoint, 7> con{pt(1, 1, 1), pt(4, 1, 2), pt(1, 4, 2), pt(9, 1, 3),
                                  pt(1, 9, 3), pt(4, 9, 6), pt(5, 7, 11)};
    CHECK(!general_position_check(con).pass);
}

TEST_CASE("curves through conditions") {
    using C = Condition;
    auto conic = curve_from_conditions(2, {{C::Through, pt(1, 1, 1), {}}, {C::Through, pt(4, 1, 2), {}},
                                           {C::Through, pt(1, 4, 2), {}}, {C::Through, pt(9, 1, 3), {}},
                                           {C::Through, pt(1, 9, 3), {}}});
    // xy - z^2, canonical first coefficient 1 is on x^2 which is zero here, so xy has 1
    CHECK(conic.eval(pt(4, 9, 6)) == 0);
    CHECK(conic.eval(pt(1, 2, 3)) != 0);
    auto line = line_through(pt(1, 0, 1), pt(0, 1, 1));
    CHECK(line.eval(pt(1, 0, 1)) == 0);
    CHECK(residual_on_line(conic, pt(1, 1, 1), pt(3, 0, 1)) == pt(4, 1, 2));
}

TEST_CASE("config a from the default seed") {
    auto c = build_config_a(default_seed_a());
    auto rep = validate_config(c);
    for (auto& ch : rep.checks) {
        INFO(ch.name);
        CHECK(ch.pass);
    }
    for (auto& f : c.curves) CHECK(on_curve(f, c.eckardt));
    CHECK(c.curves[0].degree == 1);
    CHECK(c.curves[1].degree == 1);
    CHECK(c.curves[2].degree == 2);
    CHECK(c.curves[3].degree == 2);
    auto cls = lattice_classes(c);
    CHECK(is_clique(cls));
    std::array<LClass, 7> std7;
    for (int i = 0; i < 7; ++i) {
        std7[i] = LClass(8, 0);
        std7[i][i + 1] = 1;
    }
    CHECK(classify_clique_images(dp2_data(), cls, std7) == std::array<int, 4>{1, 1, 2, 2});
}

TEST_CASE("config b and c builders") {
    std::array<LClass, 7> std7;
    for (int i = 0; i < 7; ++i) {
        std7[i] = LClass(8, 0);
        std7[i][i + 1] = 1;
    }
    auto b = build_config_b(default_seed_b());
    auto rb = validate_config(b);
    for (auto& ch : rb.checks) {
        INFO(ch.name);
        CHECK(ch.pass);
    }
    CHECK(is_clique(lattice_classes(b)));
    CHECK(classify_clique_images(dp2_data(), lattice_classes(b), std7) == std::array<int, 4>{0, 2, 2, 2});
    auto c = build_config_c(default_seed_c());
    auto rc = validate_config(c);
    for (auto& ch : rc.checks) {
        INFO(ch.name);
        CHECK(ch.pass);
    }
    CHECK(is_clique(lattice_classes(c)));
    CHECK(classify_clique_images(dp2_data(), lattice_classes(c), std7) == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("fixtures validate and match the builders") {
    auto a = load("config_a.json");
    CHECK(validate_config(a).pass());
    CHECK(to_json(a) == to_json(build_config_a(default_seed_a())));
    auto b = load("config_b.json");
    CHECK(validate_config(b).pass());
    CHECK(to_json(b) == to_json(build_config_b(default_seed_b())));
    auto c = load("config_c.json");
    CHECK(validate_config(c).pass());
    CHECK(to_json(c) == to_json(build_config_c(default_seed_c())));
}

TEST_CASE("perturbed fixture fails membership") {
    auto a = load("config_a.json");
    a.points[4] = PlanePoint::make(a.points[4].c[0] + Rat(1, 7), a.points[4].c[1], a.points[4].c[2]);
    auto rep = validate_config(a);
    CHECK(!rep.pass());
    bool membership_failed = false;
    for (auto& ch : rep.checks)
        if (ch.name == "s1_through_x5" && !ch.pass) membership_failed = true;
    CHECK(membership_failed);
}

TEST_CASE("json round trip") {
    auto a = build_config_a(default_seed_a());
    auto j = to_json(a);
    auto back = config_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"variant":"z"})")), ValidationError);
}

TEST_CASE("degenerate seeds are rejected") {
    auto s = default_seed_a();
    s.lam2 = s.lam1;
    CHECK_THROWS_AS(build_config_a(s), ValidationError);
    auto s2 = default_seed_a();
    s2.p5 = s2.q;
    CHECK_THROWS_AS(build_config_a(s2), ValidationError);
}
