#pragma once

#include "cqs/cyclic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cqs {

struct Chain {
    std::vector<long> alphas;   // E_t^2 = -alphas[t-1]
    long n() const { return static_cast<long>(alphas.size()); }
    std::vector<long> self_intersections() const;
    long dot(long s, long t) const;   // E_s . E_t, 1-based
};

// Coefficients on (B, E_1, ..., E_n, A), positions 0..n+1.
using Cycle = std::vector<long>;

// E_t-pairing of a cycle; A meets E_n, B meets E_1.
long pair_with(const Chain& c, const Cycle& z, long t);
std::string cycle_str(const Cycle& z);

struct SymbolicSheaf {
    bool zero = true;
    std::vector<long> support;   // multiplicity of E_t, index t-1
    std::vector<long> degrees;   // degree on E_t where support > 0, else 0
    int shift = 0;

    static SymbolicSheaf make_zero(long n);
    bool operator==(const SymbolicSheaf&) const = default;
    std::string str() const;
};

Chain chain(const CyclicType& t);
std::vector<long> fundamental_cycle(const Chain& c);

SymbolicSheaf psi_simple(const CyclicType& t, long i);

std::vector<long> wunram_decomposition(const CyclicType& t, long l);

struct DivisorData {
    Cycle pullback_x, pullback_y;
    std::vector<std::pair<Cycle, Cycle>> D;   // D[s-1]
};
DivisorData divisor_data(const CyclicType& t);

struct SectionDivisors {
    std::vector<Cycle> x;   // x_(l): R_l -> R_{l+1}
    std::vector<Cycle> y;   // y_(l): R_l -> R_{l+a}
};
SectionDivisors section_divisors(const CyclicType& t);

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SymbolicSheaf psi_toric_oracle(const CyclicType& t, long i);
SymbolicSheaf psi_toric_oracle(const CyclicType& t, long i, const SectionDivisors& sd);

}  // namespace cqs
