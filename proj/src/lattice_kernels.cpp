#include "cqs/lattice_kernels.hpp"

#include <stdexcept>

namespace cqs {

PackedVectors PackedVectors::pack(const std::vector<std::vector<int>>& vs) {
    PackedVectors p;
    p.count = vs.size();
    p.dim = vs.empty() ? 0 : vs[0].size();
    p.stride = (p.dim + 7) / 8 * 8;
    p.data.assign(p.count * p.stride, 0);
    for (size_t i = 0; i < p.count; ++i) {
        if (vs[i].size() != p.dim) throw std::invalid_argument("vectors differ in length");
        for (size_t j = 0; j < p.dim; ++j) p.data[i * p.stride + j] = vs[i][j];
    }
    return p;
}

void gram_scalar(const PackedVectors& p, int32_t* out) {
    for (size_t i = 0; i < p.count; ++i) {
        const int32_t* a = p.row(i);
        for (size_t j = 0; j < p.count; ++j) {
            const int32_t* b = p.row(j);
            int32_t s = a[0] * b[0];
            for (size_t k = 1; k < p.dim; ++k) s -= a[k] * b[k];
            out[i * p.count + j] = s;
        }
    }
}

bool have_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::vector<int32_t> gram(const PackedVectors& p) {
    std::vector<int32_t> out(p.count * p.count);
    if (have_avx2()) gram_avx2(p, out.data());
    else gram_scalar(p, out.data());
    return out;
}

}  // namespace cqs
