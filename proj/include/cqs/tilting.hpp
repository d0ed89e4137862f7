#pragma once

#include "cqs/collections.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cqs {

struct Interval {
    long lo = 0, hi = 0;
    bool exact() const { return lo == hi; }
    bool bounded() const;
    bool operator==(const Interval&) const = default;
    std::string str() const;
};

struct ExtensionStep {
    size_t from, to;   // X_from^r appears in the extension defining X_to
    Interval r;
};

struct Summand {
    size_t index;
    std::string label;
    std::string provenance;
    std::vector<Interval> coefficients;   // class in the basis of the collection objects
    std::optional<KClass> kclass;         // resolution-side objects with exact coefficients
};

struct OpenPair {
    size_t a, b;
    int degree;
    Interval dim;
};

struct TiltingReport {
    std::vector<Summand> summands;
    std::vector<ExtensionStep> steps;
    std::vector<OpenPair> undetermined;
    size_t certified_pairs = 0;
    bool unchanged() const { return steps.empty(); }
};

// Universal extensions: E_l -> X_l -> (+)_{m<l} X_m^{r_ml}, r_ml = ext1(X_m, E_l).
TiltingReport universal_extension_tilting(const Surface& s, const ExceptionalCollection& c);

}  // namespace cqs
