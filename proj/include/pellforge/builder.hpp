#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellforge/polysystem.hpp"

namespace pellforge {

// Degree tuple (a, b, q, x, y) of (A, B, Q, X, Y).
struct Signature {
    unsigned a = 0, b = 0, q = 0, x = 0, y = 0;
    bool degree_matched() const { return 3 * x == q + 2 * y; }
    bool admissible() const { return degree_matched() && a + b + q + x + y >= 3 * x; }
    bool operator==(const Signature& o) const {
        return a == o.a && b == o.b && q == o.q && x == o.x && y == o.y;
    }
    std::string to_string() const;
    static Signature parse(const std::string& csv);  // "a,b,q,x,y"
};

// Normalized EPZ template: X, Y, Q monic; Y's t^(y-1) coefficient zero; X's
// t^(x-1) coefficient one. Coefficient unknowns are x0..x_{x-2}, y0..y_{y-2},
// q0..q_{q-1}, a0..a_a, b0..b_b.
struct EpzTemplate {
    Signature sig;
    VarList vars;  // "t" first, then the unknowns in canonical order
    std::vector<std::string> unknowns;
    MPoly X, Y, Q, A, B;  // integer domain over vars
};

// A concrete X, A, B, Q, Y solution family over a coefficient field.
struct EpzFamily {
    Signature sig;
    MPoly X, A, B, Q, Y;  // univariate in "t"

    // X^3 + A X + B - Q Y^2 (the zero polynomial for verified families).
    MPoly residual() const;
};

EpzTemplate make_template(const Signature& sig);

// The 3x coefficient-matching equations (t^0 .. t^(3x-1)) of
// X^3 + A X + B - Q Y^2 over the unknowns; the t^(3x) coefficient vanishes
// identically by monicity (asserted).
PolySystem equate_coefficients(const EpzTemplate& tpl);

struct SignatureFamilyRow {
    Signature sig;
    std::optional<Rat> rho;  // undefined for the m = 0 first row
};

// The four infinite signature families with their exact rho values.
std::vector<SignatureFamilyRow> signature_families(unsigned m);

struct MoebiusMultipliers {
    // multipliers (s_X, s_Y, s_Q, s_A, s_B); must satisfy
    // s_X^3 = s_A s_X = s_B = s_Q s_Y^2
    Coef sX, sY, sQ, sA, sB;
    static MoebiusMultipliers from_rats(const CoefDomain& dom, const Rat& sX, const Rat& sY,
                                        const Rat& sQ, const Rat& sA, const Rat& sB);
};

// t -> alpha*t + beta followed by the multipliers; identity re-verified.
EpzFamily apply_moebius(const EpzFamily& fam, const Coef& alpha, const Coef& beta,
                        const MoebiusMultipliers& mult);
// t -> 1/t conjugation: multiplies (X,Y,Q,A,B) by (t^x, t^y, t^2, t^2x, t^3x)
// before the scalar multipliers.
EpzFamily apply_moebius_inversion(const EpzFamily& fam, const MoebiusMultipliers& mult);

// Renormalizes an arbitrary verified family to the template form (X, Y, Q
// monic, y_{y-1} = 0, x_{x-1} = 1) over its coefficient field. Returns the
// normalized family; fails when the pinned coefficient vanishes.
EpzFamily normalize_family(const EpzFamily& fam);

// Polynomial part of sqrt(X^3 / Q) at infinity plus the residual conditions
// (the two leading unsolved coefficients; identically-zero ones dropped).
// X, Q monic in t with symbolic parameter coefficients.
std::pair<MPoly, std::vector<MPoly>> series_sqrt_tail(const MPoly& X, const MPoly& Q,
                                                      const std::string& tvar = "t");

// The full first-case derivation, replayable step by step.
struct DerivationTrace {
    RatFunc b4_formula, c_formula;           // in b1,b2,b3
    RatFunc A_formula;                       // in b1,b2,b3
    RatFunc coeff_t3, coeff_t2;              // the t^3/t^2 conditions
    bool t3_has_factor = false, t2_has_factor = false;  // factor (b3 - b1 b2)
    RatFunc b1_formula;                      // in b2,b3
    MPoly final_constraint;                  // primitive integer form of 3 b3^2 - 2 b2^3
    Rat b1_value, c_value, b4_value, A_value;
    MPoly B_specialized;                     // univariate in t over Q
    struct Branch {
        std::string name;
        MPoly A, B;  // symbolic in the surviving parameters (and t for B)
        bool discriminant_vanishes = false;
        bool cusp_when_all_zero = false;
    };
    std::vector<Branch> degenerate_branches;
};

DerivationTrace appendix_case1_derivation();

}  // namespace pellforge
