#pragma once

#include "cqs/cyclic.hpp"

#include <set>
#include <string>
#include <vector>

namespace cqs {

struct ExtDims {
    long hom = 0, ext1 = 0, ext2 = 0;
    long chi() const { return hom - ext1 + ext2; }
    bool operator==(const ExtDims&) const = default;
};

struct Edge {
    long from, to, mult;
};

struct McKayQuiver {
    long r = 0;
    std::vector<Edge> solid;   // ascending (from, to), multiplicity > 0
    std::vector<Edge> dashed;
    long solid_count() const;
    long dashed_count() const;
};

std::set<long> special_weights(const CyclicType& t);
long solid_mult(const CyclicType& t, long mu, long nu);
long dashed_mult(const CyclicType& t, long mu, long nu);
ExtDims simple_ext_dims(const CyclicType& t, long mu, long nu);
long euler_pairing_simples(const CyclicType& t, long mu, long nu);
McKayQuiver mckay_quiver(const CyclicType& t);
std::string to_dot(const McKayQuiver& q);

}  // namespace cqs
