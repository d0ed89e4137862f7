#pragma once

#include "cqs/dp2.hpp"
#include "cqs/num.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cqs {

struct PlanePoint {
    std::array<Rat, 3> c;

    static PlanePoint make(Rat x, Rat y, Rat z);
    bool operator==(const PlanePoint& o) const { return c == o.c; }
    std::string str() const;
};

struct PlaneCurve {
    int degree = 1;
    std::vector<Rat> coeffs;   // monomials x^i y^j z^k, i descending then j descending

    static PlaneCurve make(int degree, std::vector<Rat> coeffs);
    Rat eval(const PlanePoint& p) const;
    std::array<Rat, 3> gradient(const PlanePoint& p) const;
    std::array<std::array<Rat, 3>, 3> hessian(const PlanePoint& p) const;
    PlaneCurve operator*(const PlaneCurve& o) const;
    bool operator==(const PlaneCurve& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

std::vector<std::array<int, 3>> monomials(int degree);

PlaneCurve line_through(const PlanePoint& p, const PlanePoint& q);
PlaneCurve pencil(const PlaneCurve& a, const Rat& lam, const PlaneCurve& b);
bool on_curve(const PlaneCurve& f, const PlanePoint& p);
bool is_node(const PlaneCurve& f, const PlanePoint& p);
bool tangent_at(const PlaneCurve& f, const PlaneCurve& g, const PlanePoint& p);

struct Condition {
    enum Kind { Through, TangentDir, Singular } kind;
    PlanePoint p;
    PlanePoint dir;   // second point on the tangent line for TangentDir
};
// The unique curve of the given degree satisfying the conditions.
PlaneCurve curve_from_conditions(int degree, const std::vector<Condition>& conds);

struct KnownRoot {
    PlanePoint p;
    int mult = 1;
    std::optional<PlaneCurve> tangent;   // for p0 itself
};
// Last intersection point of f with the conic s, parametrized by lines through p0 on s.
PlanePoint residual_on_conic(const PlaneCurve& s, const PlanePoint& p0, const PlaneCurve& f,
                             const std::vector<KnownRoot>& known);
// Second intersection of the line through q (on conic s) towards w.
PlanePoint residual_on_line(const PlaneCurve& s, const PlanePoint& q, const PlanePoint& w);

struct GeneralPosition {
    bool pass = true;
    std::string witness;
};
GeneralPosition general_position_check(const std::array<PlanePoint, 7>& pts);

struct Configuration {
    char variant = 'a';
    std::array<PlanePoint, 7> points;
    PlanePoint eckardt;        // q for (a); x_1 for (b),(c)
    PlanePoint direction;      // tangent direction at x_1 for (b),(c)
    std::vector<PlaneCurve> curves;
    bool exceptional_member = false;   // E_1 is the fourth member for (b),(c)
};

struct SeedA {
    PlanePoint q, p5, p6, p7, w1, w2;
    Rat lam1, lam2;
};
SeedA default_seed_a();
Configuration build_config_a(const SeedA& s);

struct SeedB {
    std::array<PlanePoint, 6> x;   // x_1..x_6
};
SeedB default_seed_b();
Configuration build_config_b(const SeedB& s);

struct SeedC {
    std::array<PlanePoint, 5> x;   // x_1..x_5
    PlanePoint node;               // x_7
};
SeedC default_seed_c();
Configuration build_config_c(const SeedC& s);

struct Check {
    std::string name;
    bool pass = false;
};
struct ValidationReport {
    std::vector<Check> checks;
    bool pass() const;
};
ValidationReport validate_config(const Configuration& c);

// Classes d*H - sum mult_i E_i of the four members.
std::array<LClass, 4> lattice_classes(const Configuration& c);

nlohmann::json to_json(const Configuration& c);
Configuration config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ValidationReport& r);

}  // namespace cqs
