#pragma once

#include <memory>
#include <string>
#include <variant>

#include "pellforge/nfelem.hpp"
#include "pellforge/numbers.hpp"

namespace pellforge {

enum class DomainKind { Integer, Rational, ModPrimePower, PrimeField, NumberFieldK };

// Exchangeable exact coefficient domain. Every operation is exact; there is
// no rounding anywhere in the system.
class CoefDomain {
public:
    static CoefDomain integers();
    static CoefDomain rationals();
    static CoefDomain mod_prime_power(const Int& p, unsigned k);
    static CoefDomain prime_field(const Int& p);
    static CoefDomain number_field(NumberFieldPtr f);

    DomainKind kind() const { return kind_; }
    const Int& prime() const { return p_; }
    unsigned precision() const { return k_; }
    const Int& modulus() const { return modulus_; }
    const NumberFieldPtr& field() const { return field_; }

    bool is_field() const {
        return kind_ == DomainKind::Rational || kind_ == DomainKind::PrimeField ||
               kind_ == DomainKind::NumberFieldK;
    }
    bool is_modular() const {
        return kind_ == DomainKind::ModPrimePower || kind_ == DomainKind::PrimeField;
    }

    bool operator==(const CoefDomain& o) const;
    bool operator!=(const CoefDomain& o) const { return !(*this == o); }
    std::string describe() const;

private:
    CoefDomain() = default;
    DomainKind kind_ = DomainKind::Integer;
    Int p_;
    unsigned k_ = 0;
    Int modulus_;
    NumberFieldPtr field_;
};

// A coefficient value; interpretation depends on the owning domain.
// Modular values are stored as canonical residues in [0, p^k).
using Coef = std::variant<Int, Rat, NFElem>;

// All coefficient arithmetic, dispatched on the domain.
struct DomainOps {
    explicit DomainOps(CoefDomain d) : dom(std::move(d)) {}
    CoefDomain dom;

    Coef zero() const;
    Coef one() const;
    Coef from_int(const Int& v) const;
    Coef from_rat(const Rat& v) const;  // throws if denominator not invertible
    bool is_zero(const Coef& a) const;
    bool is_one(const Coef& a) const;
    Coef add(const Coef& a, const Coef& b) const;
    Coef sub(const Coef& a, const Coef& b) const;
    Coef neg(const Coef& a) const;
    Coef mul(const Coef& a, const Coef& b) const;
    // Exact division; throws InexactDivision over Integer when not divisible.
    Coef div(const Coef& a, const Coef& b) const;
    Coef inv(const Coef& a) const;
    Coef pow(const Coef& a, unsigned long e) const;
    bool eq(const Coef& a, const Coef& b) const;
    std::string to_string(const Coef& a) const;

    // Total order used only for canonical term signs / printing; modular and
    // number-field values order by representation.
    int cmp(const Coef& a, const Coef& b) const;
};

}  // namespace pellforge
