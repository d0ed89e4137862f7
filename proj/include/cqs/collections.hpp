#pragma once

#include "cqs/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace cqs {

enum class Kind { PullO, PullT, PullO1, OL, OD, M, B, EP, EPI };

// OL: i = t. B: i, j = l. EP: j. EPI: i, j.
struct SymbolicObject {
    Kind kind = Kind::PullO;
    int i = 0, j = 0;
    bool phi = false;
    int shift = 0;

    bool is_stack_simple() const { return kind == Kind::EP || kind == Kind::EPI; }
    std::string label() const;
    static SymbolicObject parse(const std::string& s);
    void check_valid(long k) const;
    SymbolicObject with_shift(int m) const;
    SymbolicObject wrapped() const;
    bool operator==(const SymbolicObject&) const = default;
};

SymbolicObject obj_O();
SymbolicObject obj_T();
SymbolicObject obj_O1();
SymbolicObject obj_OL(int t);
SymbolicObject obj_OD();
SymbolicObject obj_M();
SymbolicObject obj_b(int i, int l);
SymbolicObject obj_e(int j);
SymbolicObject obj_e(int i, int j);

// degree -> dimension, zero entries dropped
struct HomDims {
    bool known = true;
    std::map<int, long> dims;
    long chi = 0;
    std::string rule;

    long at(int d) const;
    long hom() const { return at(0); }
    long ext1() const { return at(1); }
    long ext2() const { return at(2); }
    long euler() const;
    bool only_degrees(int lo, int hi) const;
    std::string str() const;
};

KClass kclass(const Surface& s, const SymbolicObject& x);
// Independent of the rules: Riemann-Roch, McKay, and adjunction through psi.
long chi(const Surface& s, const SymbolicObject& x, const SymbolicObject& y);
HomDims hom_dims(const Surface& s, const SymbolicObject& x, const SymbolicObject& y);

// Ext of (psi(e), E) from the torsion evaluator, shifts included.
HomDims adjunction_dims(const Surface& s, const SymbolicObject& e, const SymbolicObject& y);

struct ExceptionalCollection {
    long k = 1;
    std::string label;
    std::vector<SymbolicObject> objects;
};

const std::vector<std::string>& collection_labels();
ExceptionalCollection build_collection(long k, const std::string& label);
// k = 1 strong form: stack_mut with e_{i,2}[-1]
ExceptionalCollection table4_collection();

using IntMatrix = std::vector<std::vector<long>>;
IntMatrix gram(const Surface& s, const ExceptionalCollection& c);
Int det_of(const IntMatrix& m);

struct TableEntry {
    std::string table, from, to, expected, got;
    bool ok = false;
};
struct TableReport {
    std::vector<TableEntry> entries;
    bool all_ok() const;
    std::vector<TableEntry> mismatches() const;
};
TableReport verify_tables(long k);

}  // namespace cqs
