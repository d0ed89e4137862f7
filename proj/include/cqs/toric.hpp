#pragma once

#include "cqs/cyclic.hpp"

#include <string>
#include <vector>

namespace cqs {

using LVec = std::vector<long>;

long det2(const LVec& u, const LVec& w);
long det3(const LVec& a, const LVec& b, const LVec& c);
bool primitive(const LVec& v);

struct NormalForm {
    long r = 1, a = 0;         // canonical: a = min(a, a')
    long a_raw = 0, a_inv = 0;  // both members of the a <-> a' pair
    // g * w = (0,1), g * u = (r,-a_raw)
    std::vector<LVec> basis_change;
};

NormalForm normal_form_2d(const LVec& u, const LVec& w);

struct Fan {
    int dim = 2;
    std::vector<LVec> rays;
    std::vector<std::vector<int>> cones;   // sorted ray indices, closed under faces

    static Fan from_maximal(int dim, std::vector<LVec> rays,
                            const std::vector<std::vector<int>>& maximal);
    std::vector<std::vector<int>> maximal_cones() const;
    // Coefficients of v in the generators of cone c, or empty if v lies outside c.
    std::vector<Rat> coords_in(const std::vector<int>& c, const LVec& v) const;
    bool contains(const std::vector<int>& c, const LVec& v) const;
    bool in_relative_interior(const std::vector<int>& c, const LVec& v) const;
    bool in_support(const LVec& v) const;
    int ray_index(const LVec& v) const;
};

Fan star_subdivide(const Fan& f, const LVec& v);

// Each nonzero lattice point of the box [-b,b]^dim in the support lies in the relative
// interior of exactly one cone.
bool is_fan_on_box(const Fan& f, long b);
bool same_support_on_box(const Fan& f, const Fan& g, long b);

std::vector<LVec> resolve_2d(const CyclicType& t);

struct FanCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct JkFanReport {
    long k = 1;
    LVec rho1, rho2, rho3, rho4, v;
    std::vector<LVec> vs;   // v_0 .. v_{k-1}
    std::vector<FanCheck> checks;
    bool all_pass() const;
};

JkFanReport jk_fan_verify(long k);

}  // namespace cqs
