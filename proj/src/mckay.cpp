#include "cqs/mckay.hpp"

#include <sstream>

namespace cqs {

long McKayQuiver::solid_count() const {
    long c = 0;
    for (auto& e : solid) c += e.mult;
    return c;
}

long McKayQuiver::dashed_count() const {
    long c = 0;
    for (auto& e : dashed) c += e.mult;
    return c;
}

std::set<long> special_weights(const CyclicType& t) {
    std::set<long> out{0};
    auto is = i_series(t);
    for (size_t k = 1; k + 1 < is.size(); ++k) out.insert(mod(is[k], t.r));
    return out;
}

long solid_mult(const CyclicType& t, long mu, long nu) {
    long m = 0;
    if (mod(nu - mu - 1, t.r) == 0) ++m;
    if (mod(nu - mu - t.a, t.r) == 0) ++m;
    return m;
}

long dashed_mult(const CyclicType& t, long mu, long nu) {
    return mod(nu - mu - t.a - 1, t.r) == 0 ? 1 : 0;
}

ExtDims simple_ext_dims(const CyclicType& t, long mu, long nu) {
    return {mod(mu - nu, t.r) == 0 ? 1L : 0L, solid_mult(t, mu, nu), dashed_mult(t, mu, nu)};
}

long euler_pairing_simples(const CyclicType& t, long mu, long nu) {
    return simple_ext_dims(t, mu, nu).chi();
}

McKayQuiver mckay_quiver(const CyclicType& t) {
    McKayQuiver q;
    q.r = t.r;
    for (long mu = 0; mu < t.r; ++mu)
        for (long nu = 0; nu < t.r; ++nu) {
            if (long m = solid_mult(t, mu, nu)) q.solid.push_back({mu, nu, m});
            if (long m = dashed_mult(t, mu, nu)) q.dashed.push_back({mu, nu, m});
        }
    return q;
}

std::string to_dot(const McKayQuiver& q) {
    std::ostringstream os;
    os << "digraph mckay {\n";
    for (long v = 0; v < q.r; ++v) os << "  r" << v << ";\n";
    for (auto& e : q.solid)
        for (long k = 0; k < e.mult; ++k) os << "  r" << e.from << " -> r" << e.to << ";\n";
    for (auto& e : q.dashed)
        for (long k = 0; k < e.mult; ++k)
            os << "  r" << e.from << " -> r" << e.to << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cqs
