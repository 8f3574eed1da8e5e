#include "pellforge/domain.hpp"

#include <sstream>

namespace pellforge {

CoefDomain CoefDomain::integers() {
    CoefDomain d;
    d.kind_ = DomainKind::Integer;
    return d;
}

CoefDomain CoefDomain::rationals() {
    CoefDomain d;
    d.kind_ = DomainKind::Rational;
    return d;
}

CoefDomain CoefDomain::mod_prime_power(const Int& p, unsigned k) {
    if (!is_prime(p)) throw Error("CoefDomain: p must be prime");
    if (k < 1) throw Error("CoefDomain: precision must be >= 1");
    CoefDomain d;
    d.kind_ = k == 1 ? DomainKind::PrimeField : DomainKind::ModPrimePower;
    d.p_ = p;
    d.k_ = k;
    d.modulus_ = pow_int(p, k);
    return d;
}

CoefDomain CoefDomain::prime_field(const Int& p) { return mod_prime_power(p, 1); }

CoefDomain CoefDomain::number_field(NumberFieldPtr f) {
    if (!f) throw Error("CoefDomain: null field");
    CoefDomain d;
    d.kind_ = DomainKind::NumberFieldK;
    d.field_ = std::move(f);
    return d;
}

bool CoefDomain::operator==(const CoefDomain& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case DomainKind::Integer:
        case DomainKind::Rational:
            return true;
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return p_ == o.p_ && k_ == o.k_;
        case DomainKind::NumberFieldK:
            return field_ == o.field_ || *field_ == *o.field_;
    }
    return false;
}

std::string CoefDomain::describe() const {
    switch (kind_) {
        case DomainKind::Integer:
            return "ZZ";
        case DomainKind::Rational:
            return "QQ";
        case DomainKind::PrimeField:
            return "GF(" + p_.get_str() + ")";
        case DomainKind::ModPrimePower:
            return "ZZ/" + p_.get_str() + "^" + std::to_string(k_);
        case DomainKind::NumberFieldK:
            return "K(deg " + std::to_string(field_->degree()) + ")";
    }
    return "?";
}

namespace {
const Int& as_int(const Coef& c) { return std::get<Int>(c); }
const Rat& as_rat(const Coef& c) { return std::get<Rat>(c); }
const NFElem& as_nf(const Coef& c) { return std::get<NFElem>(c); }
}  // namespace

Coef DomainOps::zero() const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return Int(0);
        case DomainKind::Rational:
            return Rat(0);
        case DomainKind::NumberFieldK:
            return NFElem::from_rational(dom.field(), Rat(0));
    }
    return Int(0);
}

Coef DomainOps::one() const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return Int(1);
        case DomainKind::Rational:
            return Rat(1);
        case DomainKind::NumberFieldK:
            return NFElem::from_rational(dom.field(), Rat(1));
    }
    return Int(1);
}

Coef DomainOps::from_int(const Int& v) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
            return v;
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mod_reduce(v, dom.modulus());
        case DomainKind::Rational:
            return Rat(v);
        case DomainKind::NumberFieldK:
            return NFElem::from_rational(dom.field(), Rat(v));
    }
    return v;
}

Coef DomainOps::from_rat(const Rat& v) const {
    switch (dom.kind()) {
        case DomainKind::Integer: {
            if (v.get_den() != 1) throw InexactDivision("non-integer value in integer domain");
            return Int(v.get_num());
        }
        case DomainKind::Rational:
            return v;
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField: {
            auto inv = invmod(Int(v.get_den()), dom.modulus());
            if (!inv) throw Error("denominator not invertible mod " + dom.modulus().get_str());
            return mod_reduce(Int(v.get_num()) * *inv, dom.modulus());
        }
        case DomainKind::NumberFieldK:
            return NFElem::from_rational(dom.field(), v);
    }
    return v;
}

bool DomainOps::is_zero(const Coef& a) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return as_int(a) == 0;
        case DomainKind::Rational:
            return as_rat(a) == 0;
        case DomainKind::NumberFieldK:
            return as_nf(a).is_zero();
    }
    return false;
}

bool DomainOps::is_one(const Coef& a) const { return eq(a, one()); }

Coef DomainOps::add(const Coef& a, const Coef& b) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
            return Int(as_int(a) + as_int(b));
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mod_reduce(as_int(a) + as_int(b), dom.modulus());
        case DomainKind::Rational:
            return Rat(as_rat(a) + as_rat(b));
        case DomainKind::NumberFieldK:
            return as_nf(a) + as_nf(b);
    }
    return a;
}

Coef DomainOps::sub(const Coef& a, const Coef& b) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
            return Int(as_int(a) - as_int(b));
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mod_reduce(as_int(a) - as_int(b), dom.modulus());
        case DomainKind::Rational:
            return Rat(as_rat(a) - as_rat(b));
        case DomainKind::NumberFieldK:
            return as_nf(a) - as_nf(b);
    }
    return a;
}

Coef DomainOps::neg(const Coef& a) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
            return Int(-as_int(a));
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mod_reduce(-as_int(a), dom.modulus());
        case DomainKind::Rational:
            return Rat(-as_rat(a));
        case DomainKind::NumberFieldK:
            return -as_nf(a);
    }
    return a;
}

Coef DomainOps::mul(const Coef& a, const Coef& b) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
            return Int(as_int(a) * as_int(b));
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mod_reduce(as_int(a) * as_int(b), dom.modulus());
        case DomainKind::Rational:
            return Rat(as_rat(a) * as_rat(b));
        case DomainKind::NumberFieldK:
            return as_nf(a) * as_nf(b);
    }
    return a;
}

Coef DomainOps::div(const Coef& a, const Coef& b) const {
    if (is_zero(b)) throw Error("division by zero coefficient");
    switch (dom.kind()) {
        case DomainKind::Integer: {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), as_int(a).get_mpz_t(),
                        as_int(b).get_mpz_t());
            if (r != 0) throw InexactDivision("inexact integer coefficient division");
            return q;
        }
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return mul(a, inv(b));
        case DomainKind::Rational:
            return Rat(as_rat(a) / as_rat(b));
        case DomainKind::NumberFieldK:
            return as_nf(a) * as_nf(b).inverse();
    }
    return a;
}

Coef DomainOps::inv(const Coef& a) const {
    switch (dom.kind()) {
        case DomainKind::Integer: {
            if (as_int(a) == 1 || as_int(a) == -1) return a;
            throw InexactDivision("non-unit integer inverse");
        }
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField: {
            auto r = invmod(as_int(a), dom.modulus());
            if (!r) throw Error("non-invertible residue " + as_int(a).get_str());
            return *r;
        }
        case DomainKind::Rational:
            if (as_rat(a) == 0) throw Error("division by zero");
            return Rat(1 / as_rat(a));
        case DomainKind::NumberFieldK:
            return as_nf(a).inverse();
    }
    return a;
}

Coef DomainOps::pow(const Coef& a, unsigned long e) const {
    Coef acc = one();
    Coef base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool DomainOps::eq(const Coef& a, const Coef& b) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return as_int(a) == as_int(b);
        case DomainKind::Rational:
            return as_rat(a) == as_rat(b);
        case DomainKind::NumberFieldK:
            return as_nf(a) == as_nf(b);
    }
    return false;
}

int DomainOps::cmp(const Coef& a, const Coef& b) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return pellforge::sign(Int(as_int(a) - as_int(b)));
        case DomainKind::Rational:
            return pellforge::sign(Rat(as_rat(a) - as_rat(b)));
        case DomainKind::NumberFieldK: {
            const auto& ca = as_nf(a).coords();
            const auto& cb = as_nf(b).coords();
            for (size_t i = ca.size(); i-- > 0;) {
                if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

std::string DomainOps::to_string(const Coef& a) const {
    switch (dom.kind()) {
        case DomainKind::Integer:
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField:
            return as_int(a).get_str();
        case DomainKind::Rational: {
            const Rat& r = as_rat(a);
            if (r.get_den() == 1) return r.get_num().get_str();
            return r.get_num().get_str() + "/" + r.get_den().get_str();
        }
        case DomainKind::NumberFieldK:
            return as_nf(a).to_string();
    }
    return "?";
}

}  // namespace pellforge
