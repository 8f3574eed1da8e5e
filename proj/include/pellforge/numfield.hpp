#pragma once

#include <optional>
#include <vector>

#include "pellforge/mpoly.hpp"

namespace pellforge {

// nf_ops live on NFElem itself (nfelem.hpp); this header holds the pieces
// that need polynomial machinery.

// Monic minimal polynomial of a over Q, computed as the squarefree/power
// extraction of resultant_z(m(z), x - a(z)). Returned as a univariate MPoly
// over Rational in the given variable name.
MPoly nf_minpoly(const NFElem& a, const std::string& var = "z");

struct PadicRootDiagnostic {
    Int residue;     // the root mod p it came from
    bool excluded;   // true when the root mod p is not simple (ramified)
};

// One lifted root mod p^k per simple root of the field's minpoly mod p;
// repeated roots mod p are excluded and reported.
std::vector<Int> nf_padic_roots(const NumberFieldPtr& field, const Int& p, unsigned k,
                                std::vector<PadicRootDiagnostic>* diagnostics = nullptr);

// Evaluate the power-basis coordinates of a at a residue root of the minpoly
// mod p^k. Throws when a coordinate denominator is not invertible mod p.
Int nf_embed_mod(const NFElem& a, const Int& p, unsigned k, const Int& root);

// Square root of c in K when it exists: finds a p-adic square root at an
// unramified degree-1 prime, recognises it in the power basis by lattice
// reduction, and verifies exactly. nullopt when c is not a square in K.
std::optional<NFElem> nf_sqrt(const NFElem& c);

// Recognise a residue mod p^k as an element of K embedded via the given root:
// lattice search for small (a_0..a_{n-1}, b) with sum a_i theta^i = b * value.
// Exactness is NOT verified here beyond the congruence; callers verify.
std::optional<NFElem> nf_recognize(const NumberFieldPtr& field, const Int& value, const Int& p,
                                   unsigned k, const Int& root);

// Roots in K of a univariate polynomial over K (used to undo resultant
// steps): p-adic root finding at a degree-1 prime, recognition, then exact
// verification by substitution.
std::vector<NFElem> nf_univariate_roots(const MPoly& f);

}  // namespace pellforge
