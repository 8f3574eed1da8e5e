#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pellforge/numbers.hpp"

namespace pellforge {

// Number field Q[z]/(m(z)) in the power basis of a root theta of the monic
// minimal polynomial m. Irreducibility is an input contract: we reject only
// when factoring m mod a few primes certifies a contradiction (a root that
// divides out over Q would show up as a rational linear factor).
class NumberField {
public:
    // minpoly given low-to-high, must be monic.
    explicit NumberField(std::vector<Rat> minpoly, std::string var = "z");

    unsigned degree() const { return static_cast<unsigned>(minpoly_.size() - 1); }
    const std::vector<Rat>& minpoly() const { return minpoly_; }
    const std::string& var() const { return var_; }

    bool operator==(const NumberField& o) const { return minpoly_ == o.minpoly_; }

private:
    std::vector<Rat> minpoly_;  // monic, degree = size-1
    std::string var_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field, coords in the power basis 1, theta, ..., theta^(n-1).
class NFElem {
public:
    NFElem() = default;
    NFElem(NumberFieldPtr field, std::vector<Rat> coords);
    static NFElem from_rational(NumberFieldPtr field, const Rat& r);
    static NFElem generator(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;  // coords 1..n-1 all zero
    Rat rational_part() const { return coords_.empty() ? Rat(0) : coords_[0]; }

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator-() const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rat& r) const;
    NFElem inverse() const;            // throws Error on zero
    NFElem pow(long e) const;          // negative e via inverse
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    // Determinant of multiplication-by-this in the power basis.
    Rat norm() const;

    // Common denominator of the coordinates.
    Int denominator() const;

    std::string to_string() const;

private:
    void check_compatible(const NFElem& o) const;
    NumberFieldPtr field_;
    std::vector<Rat> coords_;
};

// u + v*sqrt(c2) with u, v in K; c2 fixed by context (never materialised).
struct RelQuadElem {
    NFElem u, v;

    // Multiplication uses u1*u2 + c2*v1*v2.
    RelQuadElem mul(const RelQuadElem& o, const NFElem& c2) const;
    // Inverse of a relative-norm-1 element is the conjugate.
    RelQuadElem conjugate() const { return {u, -v}; }
    RelQuadElem pow(long e, const NFElem& c2) const;
    // u^2 - c2 v^2.
    NFElem relative_norm(const NFElem& c2) const;
};

}  // namespace pellforge
