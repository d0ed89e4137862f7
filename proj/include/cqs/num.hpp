#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqs {

using Int = mpz_class;
using Rat = mpq_class;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

long to_long(const Int& x);
Rat make_rat(long num, long den = 1);

// "num/den", always with an explicit denominator
std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMatrix& m);

// Unique solution of m x = b, or nullopt if inconsistent or underdetermined.
std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& b);

// Basis of the right kernel.
std::vector<RatVector> nullspace(const RatMatrix& m);

Rat det(RatMatrix m);
Int det_int(const std::vector<std::vector<Int>>& m);

}  // namespace cqs
