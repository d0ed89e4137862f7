#pragma once

#include "cqs/num.hpp"

#include <string>
#include <vector>

namespace cqs {

// The singularity 1/r(1,a).
struct CyclicType {
    long r = 2;
    long a = 1;

    static CyclicType make(long r, long a);
    long n() const;
    std::string str() const;
    bool operator==(const CyclicType&) const = default;
};

// Series values are bounded by r, so machine words are exact here.
using Series = std::vector<long>;

std::vector<long> hj_expand(const CyclicType& t);
Rat cf_value(const std::vector<long>& alphas);

Series i_series(const CyclicType& t);
Series j_series(const CyclicType& t);
Series h_series(const CyclicType& t, long s);

CyclicType inverse_weight(const CyclicType& t);

long mod(long x, long r);

}  // namespace cqs
