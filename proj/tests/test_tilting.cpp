#include "doctest.h"

#include "cqs/tilting.hpp"

using namespace cqs;

TEST_CASE("strong collection is unchanged") {
    auto s = build_surface(1);
    auto r = universal_extension_tilting(s, build_collection(1, "sigma_mut"));
    CHECK(r.unchanged());
    CHECK(r.undetermined.empty());
    CHECK(r.certified_pairs == 15 * 15);
    for (auto& sm : r.summands) REQUIRE(sm.kclass);
    auto t4 = universal_extension_tilting(s, table4_collection());
    CHECK(t4.unchanged());
    CHECK(t4.undetermined.empty());
}

TEST_CASE("k = 2 mutated collection: one step per b-pair") {
    auto s = build_surface(2);
    auto c = build_collection(2, "sigma_mut");
    auto r = universal_extension_tilting(s, c);
    REQUIRE(r.steps.size() == 4);
    for (auto& st : r.steps) {
        CHECK(c.objects[st.from].kind == Kind::B);
        CHECK(c.objects[st.to].kind == Kind::B);
        CHECK(c.objects[st.from].i == c.objects[st.to].i);
        CHECK(st.r == Interval{1, 1});
    }
    CHECK(r.undetermined.empty());
    CHECK(r.certified_pairs == c.objects.size() * c.objects.size());
    auto& x = r.summands[c.objects.size() - 1];
    CHECK(x.label == "X(b4.2)");
    REQUIRE(x.kclass);
    CHECK(*x.kclass == kclass(s, obj_b(4, 1)) + kclass(s, obj_b(4, 2)));
}

TEST_CASE("k <= 3 runs leave nothing undetermined") {
    for (long k = 1; k <= 3; ++k) {
        CAPTURE(k);
        auto s = build_surface(k);
        auto c = build_collection(k, "sigma_mut");
        auto r = universal_extension_tilting(s, c);
        CHECK(r.steps.size() == static_cast<size_t>(4 * k * (k - 1) / 2));
        CHECK(r.undetermined.empty());
        auto st = universal_extension_tilting(s, build_collection(k, "stack_mut"));
        CHECK(st.undetermined.empty());
    }
}

TEST_CASE("collections with higher degrees are rejected") {
    auto s = build_surface(2);
    CHECK_THROWS_AS(universal_extension_tilting(s, build_collection(2, "stack")), ValidationError);
}
