#include "doctest.h"

#include "cqs/dp2.hpp"
#include "cqs/lattice_kernels.hpp"
#include "cqs/num.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace cqs;

namespace {

LClass cls(int d, std::initializer_list<int> minus) {
    LClass v(8, 0);
    v[0] = d;
    for (int i : minus) v[i] -= 1;
    return v;
}

LClass e(int i) {
    LClass v(8, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("exceptional vector counts") {
    auto v7 = exceptional_vectors(7);
    CHECK(v7.size() == 56);
    CHECK(exceptional_vectors(6).size() == 27);
    CHECK(exceptional_vectors(8).size() == 240);
    CHECK(std::find(v7.begin(), v7.end(), e(1)) != v7.end());
    std::map<int, int> hist;
    for (auto& v : v7) ++hist[v[0]];
    CHECK(hist == std::map<int, int>{{0, 7}, {1, 21}, {2, 21}, {3, 7}});
}

TEST_CASE("exceptional vectors by brute force over a box") {
    // independent of the Cauchy-Schwarz pruning: degrees -4..4, coefficients -3..3
    long found = 0;
    std::vector<int> x(7, -3);
    auto k = canonical_class(7);
    for (int d = -4; d <= 4; ++d) {
        std::fill(x.begin(), x.end(), -3);
        while (true) {
            LClass v{d};
            v.insert(v.end(), x.begin(), x.end());
            if (lat_dot(v, v) == -1 && lat_dot(v, k) == -1) ++found;
            int i = 0;
            while (i < 7 && x[i] == 3) x[i++] = -3;
            if (i == 7) break;
            ++x[i];
        }
    }
    CHECK(found == 56);
}

TEST_CASE("duality") {
    auto& d = dp2_data();
    CHECK(dual(e(1)) == LClass{3, -2, -1, -1, -1, -1, -1, -1});
    CHECK(d.dual_pairs() == 28);
    for (size_t i = 0; i < d.vecs.size(); ++i) {
        CHECK(dual(dual(d.vecs[i])) == d.vecs[i]);
        CHECK(is_exceptional(dual(d.vecs[i])));
        CHECK(d.dot(i, d.dual_of[i]) == 2);
    }
    CHECK_THROWS_AS(dual(LClass{1, 0, 0, 0, 0, 0, 0, 0}), ValidationError);
}

TEST_CASE("pairwise products") {
    auto& d = dp2_data();
    size_t m = d.vecs.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            int x = d.dot(i, j);
            REQUIRE(x == lat_dot(d.vecs[i], d.vecs[j]));
            if (i == j) REQUIRE(x == -1);
            else {
                REQUIRE(x >= 0);
                REQUIRE(x <= 2);
                REQUIRE((x == 2) == (d.dual_of[i] == int(j)));
            }
        }
}

TEST_CASE("gram kernels agree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ent(-50, 50);
    for (int dim : {3, 8, 9, 16, 17}) {
        std::vector<std::vector<int>> vs(37, std::vector<int>(dim));
        for (auto& v : vs)
            for (auto& x : v) x = ent(rng);
        auto p = PackedVectors::pack(vs);
        std::vector<int32_t> a(37 * 37), b(37 * 37);
        gram_scalar(p, a.data());
        gram_avx2(p, b.data());
        CHECK(a == b);
        for (int i = 0; i < 37; ++i)
            for (int j = 0; j < 37; ++j) {
                Int ref = Int(vs[i][0]) * vs[j][0];
                for (int t = 1; t < dim; ++t) ref -= Int(vs[i][t]) * vs[j][t];
                REQUIRE(ref == a[i * 37 + j]);
            }
    }
}

TEST_CASE("cliques and exceptional sets") {
    auto& d = dp2_data();
    CHECK(d.cliques.size() == 630);
    CHECK(d.exc_sets.size() == 576);
    std::array<LClass, 4> a{cls(1, {1, 2}), cls(1, {3, 4}), cls(2, {1, 3, 5, 6, 7}),
                            cls(2, {2, 4, 5, 6, 7})};
    CHECK(is_clique(a));
    std::array<int, 4> idx;
    for (int i = 0; i < 4; ++i) idx[i] = d.index_of(a[i]);
    std::sort(idx.begin(), idx.end());
    CHECK(std::find(d.cliques.begin(), d.cliques.end(), idx) != d.cliques.end());
    ExcSet std7;
    for (int i = 0; i < 7; ++i) std7[i] = d.index_of(e(i + 1));
    std::sort(std7.begin(), std7.end());
    CHECK(std::find(d.exc_sets.begin(), d.exc_sets.end(), std7) != d.exc_sets.end());
    CHECK(max_intersection_one_subset(d) >= 4);
}

TEST_CASE("each exceptional set is a unimodular basis change") {
    auto& d = dp2_data();
    auto k = canonical_class(7);
    for (auto& s : d.exc_sets) {
        LClass h(8);
        for (int i = 0; i < 8; ++i) {
            int x = -k[i];
            for (int v : s) x += d.vecs[v][i];
            REQUIRE(x % 3 == 0);
            h[i] = x / 3;
        }
        REQUIRE(lat_dot(h, h) == 1);
        std::vector<std::vector<Int>> m{std::vector<Int>(h.begin(), h.end())};
        for (int v : s) m.emplace_back(d.vecs[v].begin(), d.vecs[v].end());
        Int det = det_int(m);
        REQUIRE(abs(det) == 1);
    }
}

TEST_CASE("isometry invariance under permutations of e_1..e_7") {
    auto& d = dp2_data();
    std::vector<int> perm{3, 1, 6, 2, 7, 5, 4};
    auto apply = [&](const LClass& v) {
        LClass w(8);
        w[0] = v[0];
        for (int i = 1; i <= 7; ++i) w[perm[i - 1]] = v[i];
        return w;
    };
    std::set<std::vector<int>> cl;
    for (auto& c : d.cliques) {
        std::vector<int> img;
        for (int x : c) img.push_back(d.index_of(apply(d.vecs[x])));
        REQUIRE(std::find(img.begin(), img.end(), -1) == img.end());
        std::sort(img.begin(), img.end());
        cl.insert(img);
    }
    CHECK(cl.size() == 630);
    std::set<std::vector<int>> es;
    for (auto& s : d.exc_sets) {
        std::vector<int> img;
        for (int x : s) img.push_back(d.index_of(apply(d.vecs[x])));
        std::sort(img.begin(), img.end());
        es.insert(img);
    }
    CHECK(es.size() == 576);
}

TEST_CASE("clique cover, both modes") {
    auto& d = dp2_data();
    for (auto& c : d.cliques) {
        REQUIRE(!disjoint_exc_sets(d, c, false).empty());
        REQUIRE(!disjoint_exc_sets(d, c, true).empty());
    }
}

TEST_CASE("clique images over all disjoint pairs") {
    auto& d = dp2_data();
    std::set<std::array<int, 4>> seen;
    for (auto& c : d.cliques)
        for (int s : disjoint_exc_sets(d, c, false)) {
            auto p = classify_clique_images(d, c, d.exc_sets[s]);
            REQUIRE(allowed_pattern(p));
            seen.insert(p);
        }
    CHECK(seen == std::set<std::array<int, 4>>{{1, 1, 2, 2}, {1, 1, 1, 3}});
    std::set<std::array<int, 4>> all;
    for (auto& c : d.cliques)
        for (auto& s : d.exc_sets) {
            auto p = classify_clique_images(d, c, s);
            REQUIRE(allowed_pattern(p));
            all.insert(p);
        }
    CHECK(all.size() == 4);
}

TEST_CASE("example configurations classify") {
    auto& d = dp2_data();
    std::array<LClass, 7> std7;
    for (int i = 0; i < 7; ++i) std7[i] = e(i + 1);
    std::array<LClass, 4> a{cls(1, {1, 2}), cls(1, {3, 4}), cls(2, {1, 3, 5, 6, 7}),
                            cls(2, {2, 4, 5, 6, 7})};
    CHECK(classify_clique_images(d, a, std7) == std::array<int, 4>{1, 1, 2, 2});
    std::array<LClass, 4> b{cls(2, {1, 2, 3, 4, 5}), cls(2, {1, 2, 3, 6, 7}),
                            cls(2, {1, 4, 5, 6, 7}), e(1)};
    CHECK(is_clique(b));
    CHECK(classify_clique_images(d, b, std7) == std::array<int, 4>{0, 2, 2, 2});
    LClass cubic = cls(3, {1, 2, 3, 4, 5, 6, 7, 7});
    std::array<LClass, 4> c{cls(1, {1, 2}), cls(2, {1, 3, 4, 5, 6}), cubic, e(1)};
    CHECK(is_clique(c));
    CHECK(classify_clique_images(d, c, std7) == std::array<int, 4>{0, 1, 2, 3});
}
