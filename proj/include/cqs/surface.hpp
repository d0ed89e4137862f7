#pragma once

#include "cqs/mckay.hpp"
#include "cqs/num.hpp"
#include "cqs/resolution.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cqs {

// Basis H, E_1..E_7, G_0, G_{i,j}; H^2 = 1, the rest -1.
struct PicBasis {
    long k = 1;
    long rank() const { return 9 + 4 * k; }
    static constexpr int H = 0;
    static int E(int t) { return t; }
    static constexpr int G0 = 8;
    int G(int i, int j) const { return 9 + (i - 1) * static_cast<int>(k) + (j - 1); }
    std::string name(int idx) const;
};

using PicClass = std::vector<long>;

long pic_dot(const PicClass& a, const PicClass& b);
PicClass pic_add(const PicClass& a, const PicClass& b, long s = 1);
std::string pic_str(const PicBasis& b, const PicClass& c);

// Curve ids: F, C_{i,j} (0 <= j <= k), L_t.
struct Surface {
    PicBasis basis;
    PicClass K, D, H;
    std::vector<PicClass> curve;       // by curve id
    std::vector<std::string> label;    // "F", "C1,0", "L3"
    std::vector<int> plane_degree;     // degree of the image in P^2 (0 if contracted)
    std::array<std::array<int, 7>, 4> A{};   // a_{i,t} = C_{i,0}.L_t

    int F() const { return 0; }
    int C(int i, int j) const { return 1 + (i - 1) * static_cast<int>(basis.k + 1) + j; }
    int L(int t) const { return 1 + 4 * static_cast<int>(basis.k + 1) + (t - 1); }
    long k() const { return basis.k; }
    int curve_count() const { return static_cast<int>(curve.size()); }
};

Surface build_surface(long k);

struct Discrepancies {
    Rat d;
    std::vector<Rat> dj;   // d_1..d_k
};
Discrepancies discrepancies_closed_form(long k);
Discrepancies discrepancies_solved(const Surface& s);

struct Ranks {
    long picard, k_theory, rho_X;
};
Ranks ranks(long k);

struct KClass {
    Int rank = 0;
    PicClass c1;
    Rat ch2 = 0;
    bool operator==(const KClass&) const = default;
    KClass shifted(int s) const;
    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass scaled(long m) const;
};

long euler_pairing(const Surface& s, const KClass& x, const KClass& y);

// Sheaf supported on curves: multiplicity and degree per curve id.
struct CurveSheaf {
    bool zero = true;
    std::map<int, long> support;
    std::map<int, long> degree;
    int shift = 0;
    bool operator==(const CurveSheaf&) const = default;
    std::string str(const Surface& s) const;
};

KClass kclass_of(const Surface& s, const CurveSheaf& c);

// Stack simples: e_j at p (weights mod 4k+1) and e_{i,j} at p_i (weights mod 2k+1).
CurveSheaf psi_e(const Surface& s, long j);
CurveSheaf psi_ei(const Surface& s, int i, long j);
// Same images computed from psi_simple on 1/(4k+1)(1,1) and 1/(2k+1)(1,k), transported.
CurveSheaf psi_e_transported(const Surface& s, long j);
CurveSheaf psi_ei_transported(const Surface& s, int i, long j);

// Splitting type of a bundle restricted to an irreducible rational curve.
enum class Bundle { O, T, O1, M };
std::vector<long> splitting(const Surface& s, Bundle b, int curve);
int bundle_rank(Bundle b);

// Ext dimensions of (O_C(d)[shift], E) by Serre duality and adjunction, degrees 0..3.
// Against a bundle, or against O_Z for an effective cycle Z given by curve multiplicities.
std::vector<long> torsion_ext_bundle(const Surface& s, const CurveSheaf& t, Bundle b);
std::vector<long> torsion_ext_cycle(const Surface& s, const CurveSheaf& t, const std::map<int, long>& z);

}  // namespace cqs
