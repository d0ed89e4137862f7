#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cqs {

// Packed integer vectors for the form diag(1,-1,...,-1), padded to a multiple of 8 lanes.
struct PackedVectors {
    size_t count = 0;
    size_t dim = 0;
    size_t stride = 0;
    std::vector<int32_t> data;

    static PackedVectors pack(const std::vector<std::vector<int>>& vs);
    const int32_t* row(size_t i) const { return data.data() + i * stride; }
};

// out[i*count + j] = v_i . v_j
void gram_scalar(const PackedVectors& p, int32_t* out);
void gram_avx2(const PackedVectors& p, int32_t* out);
bool have_avx2();
std::vector<int32_t> gram(const PackedVectors& p);

}  // namespace cqs
