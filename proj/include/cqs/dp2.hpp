#pragma once

#include <array>
#include <string>
#include <vector>

namespace cqs {

// Coordinates (d, x_1..x_n) of d*H + sum x_i E_i in I^{1,n}.
using LClass = std::vector<int>;

int lat_dot(const LClass& u, const LClass& v);
LClass canonical_class(int n);   // K = (-3, 1, ..., 1)

// All v with v.v = -1 and v.K = -1, sorted.
std::vector<LClass> exceptional_vectors(int n = 7);

LClass dual(const LClass& v);   // -K - v, degree-two case

using Clique = std::array<int, 4>;       // indices into exceptional_vectors(7)
using ExcSet = std::array<int, 7>;

struct Dp2Data {
    std::vector<LClass> vecs;
    std::vector<int> gram;                     // 56 x 56
    std::vector<int> dual_of;                  // index of dual vector
    std::vector<Clique> cliques;
    std::vector<ExcSet> exc_sets;

    int dot(int i, int j) const { return gram[i * vecs.size() + j]; }
    int index_of(const LClass& v) const;
    long dual_pairs() const;
};

const Dp2Data& dp2_data();

// Largest subset with all pairwise products 1.
int max_intersection_one_subset(const Dp2Data& d);

// Exceptional sets sharing no member with the clique (and with its dual clique if asked).
std::vector<int> disjoint_exc_sets(const Dp2Data& d, const Clique& c, bool avoid_dual);

// Degree multiset (ascending) of the clique members after blowing down the set s.
std::array<int, 4> classify_clique_images(const Dp2Data& d, const std::array<LClass, 4>& c,
                                          const std::array<LClass, 7>& s);
std::array<int, 4> classify_clique_images(const Dp2Data& d, const Clique& c, const ExcSet& s);

bool allowed_pattern(const std::array<int, 4>& p);
std::string pattern_str(const std::array<int, 4>& p);

bool is_exceptional(const LClass& v);
bool is_clique(const std::array<LClass, 4>& c);

}  // namespace cqs
