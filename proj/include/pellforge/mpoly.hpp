#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pellforge/domain.hpp"

namespace pellforge {

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

class RatFunc;

// Sparse exact multivariate polynomial over an exchangeable coefficient
// domain. Terms are kept sorted in descending lex order (variable 0 most
// significant) with no zero coefficients, so equality is structural.
class MPoly {
public:
    MPoly() : MPoly(CoefDomain::integers(), make_vars({})) {}
    MPoly(CoefDomain dom, VarList vars);

    static MPoly constant(const CoefDomain& dom, const VarList& vars, const Coef& c);
    static MPoly from_int(const CoefDomain& dom, const VarList& vars, const Int& v);
    static MPoly variable(const CoefDomain& dom, const VarList& vars, const std::string& name);
    // exps entries of length nvars; combines duplicates, drops zeros.
    static MPoly from_terms(const CoefDomain& dom, const VarList& vars,
                            std::vector<std::pair<std::vector<uint32_t>, Coef>> terms);

    const CoefDomain& domain() const { return dom_; }
    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    size_t nterms() const { return coefs_.size(); }
    size_t var_index(const std::string& name) const;  // throws UnknownVariable

    bool is_zero() const { return coefs_.empty(); }
    bool is_constant() const;
    Coef constant_value() const;  // zero() when is_zero

    std::span<const uint32_t> exps(size_t i) const {
        return {exps_.data() + i * nvars(), nvars()};
    }
    const Coef& coef(size_t i) const { return coefs_[i]; }

    int degree(size_t var) const;
    int degree(const std::string& var) const { return degree(var_index(var)); }
    int total_degree() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly mul_coef(const Coef& c) const;
    MPoly mul_var_power(size_t var, uint32_t e) const;
    MPoly pow(unsigned long n) const;

    // Throws InexactDivision when o does not divide exactly.
    MPoly exact_div(const MPoly& o) const;
    // Quotient and remainder of leading-term division; rem has no term
    // divisible by o's leading term. Used by exact_div internally.
    std::pair<MPoly, MPoly> divmod_leadterm(const MPoly& o) const;

    // Coefficient of var^d, as a polynomial in the remaining variables
    // (same variable list, var exponent zeroed).
    MPoly coeff_in(size_t var, uint32_t d) const;
    MPoly coeff_in(const std::string& var, uint32_t d) const {
        return coeff_in(var_index(var), d);
    }
    MPoly leading_coeff(size_t var) const;

    MPoly derivative(size_t var) const;
    MPoly derivative(const std::string& var) const { return derivative(var_index(var)); }

    MPoly substitute(size_t var, const MPoly& r) const;
    MPoly substitute(const std::string& var, const MPoly& r) const {
        return substitute(var_index(var), r);
    }
    RatFunc substitute(size_t var, const RatFunc& r) const;
    RatFunc substitute(const std::string& var, const RatFunc& r) const;

    Coef evaluate(const std::vector<Coef>& point) const;
    MPoly evaluate_partial(size_t var, const Coef& val) const;

    // Integer-domain content/primitive split; content carries the sign of the
    // leading coefficient so the primitive part's leading coefficient is
    // positive. Zero polynomial returns (0, 0).
    std::pair<Int, MPoly> content_primitive() const;

    // Over Rational: least common denominator clearing. Returns (c, P) with
    // this = P * c, P primitive over the integers.
    std::pair<Rat, MPoly> to_integer_cleared() const;

    MPoly to_domain(const CoefDomain& nd) const;
    MPoly with_vars(const VarList& nv) const;  // variable set embedding

    std::string to_string() const;
    // Parses the canonical text format (integers/rationals, '^', optional
    // '*', parentheses; for number-field domains the generator symbol is
    // folded into the coefficients).
    static MPoly parse(const CoefDomain& dom, const VarList& vars, const std::string& text);

    const DomainOps& ops() const { return ops_; }

private:
    friend class MPolyBuilder;
    void assert_compatible(const MPoly& o) const;
    CoefDomain dom_;
    DomainOps ops_;
    VarList vars_;
    std::vector<uint32_t> exps_;  // nterms * nvars, rows sorted lex-descending
    std::vector<Coef> coefs_;
};

// num/den in lowest terms; denominator sign-normalized (positive leading
// coefficient over Z/Q, monic over fields).
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(MPoly num, MPoly den);
    static RatFunc from_poly(MPoly p);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_poly() const;
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const;

    RatFunc substitute(const std::string& var, const MPoly& r) const;
    RatFunc substitute(const std::string& var, const RatFunc& r) const;

    std::string to_string() const;
    static RatFunc parse(const CoefDomain& dom, const VarList& vars, const std::string& text);

private:
    MPoly num_, den_;
};

// --- algorithms -----------------------------------------------------------

// Sylvester-matrix resultant with respect to var; both arguments need
// positive degree in var. Subresultant PRS with content stripping, falling
// back to a fraction-free Sylvester determinant expansion for small matrices.
MPoly resultant(const MPoly& P, const MPoly& R, const std::string& var);
MPoly resultant(const MPoly& P, const MPoly& R, size_t var);

// Fraction-free Sylvester determinant (Bareiss over the polynomial ring);
// exponential-size safe only for small matrices. Kept public as the
// independent second route for the PRS path.
MPoly resultant_sylvester(const MPoly& P, const MPoly& R, size_t var);

// Pseudo-remainder of A by B with respect to var: lc(B)^(deg A - deg B + 1)*A
// = Q*B + R. Returns R.
MPoly pseudo_rem(const MPoly& A, const MPoly& B, size_t var);

// GCD via primitive PRS (any domain; up to units: primitive with positive
// leading coefficient over Z, monic over fields).
MPoly gcd_mpoly(const MPoly& A, const MPoly& B);

// P / gcd(P, dP/dv) over all variables until squarefree.
MPoly squarefree_part(const MPoly& P);

// Square root of a univariate polynomial over a field domain by undetermined
// coefficients from the top degree downward; nullopt when P is not a square.
// The reported failure index (when non-null) is the first mismatching
// coefficient degree.
std::optional<MPoly> poly_sqrt(const MPoly& P, int* failure_degree = nullptr,
                               const std::function<std::optional<Coef>(const Coef&)>&
                                   coef_sqrt = nullptr);

// All rational roots with multiplicity of a nonzero univariate polynomial
// over Rational (or Integer) domain.
std::vector<std::pair<Rat, unsigned>> rational_roots(const MPoly& P);

// Embedding of a number-field-coefficient polynomial into Z/p^k via a root r
// of the field's minpoly mod p^k. Throws when a coordinate denominator is not
// invertible mod p.
MPoly embed_nf_mod(const MPoly& P, const Int& p, unsigned k, const Int& root);

// Evaluate a univariate polynomial at a Coef point of its own domain.
Coef eval_univariate(const MPoly& P, const Coef& x);

}  // namespace pellforge
