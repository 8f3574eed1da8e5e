#include "pellforge/mpoly.hpp"

namespace pellforge {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    num_.ops();  // domain sanity via assert below
    if (num_.domain() != den_.domain()) throw DomainMismatch("RatFunc: mixed domains");
    const CoefDomain& dom = num_.domain();
    DomainOps ops{dom};
    if (num_.is_zero()) {
        den_ = MPoly::constant(dom, num_.vars(), ops.one());
        return;
    }
    if (den_.is_constant()) {
        if (dom.is_field()) {
            num_ = num_.mul_coef(ops.inv(den_.constant_value()));
            den_ = MPoly::constant(dom, num_.vars(), ops.one());
            return;
        }
        if (dom.kind() == DomainKind::Integer) {
            Int d = std::get<Int>(den_.constant_value());
            auto [c, p] = num_.content_primitive();
            Int g = gcd_int(c, d);
            if (d < 0) g = -g;
            num_ = p.mul_coef(Coef(Int(c / g)));
            den_ = MPoly::constant(dom, num_.vars(), Coef(Int(d / g)));
            return;
        }
    }
    // full normalization: divide by gcd, fix denominator sign/leading unit
    MPoly g = gcd_mpoly(num_, den_);
    if (!g.is_constant() || (dom.kind() == DomainKind::Integer &&
                             std::get<Int>(g.constant_value()) != 1)) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (dom.kind() == DomainKind::Integer) {
        auto [cn, pn] = num_.content_primitive();
        auto [cd, pd] = den_.content_primitive();
        Int gg = gcd_int(cn, cd);
        if (cd < 0) gg = -gg;
        num_ = pn.mul_coef(Coef(Int(cn / gg)));
        den_ = pd.mul_coef(Coef(Int(cd / gg)));
    } else if (dom.kind() == DomainKind::Rational) {
        if (std::get<Rat>(den_.coef(0)) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    } else if (dom.is_field() || dom.kind() == DomainKind::NumberFieldK) {
        Coef lead = den_.coef(0);
        if (!ops.is_one(lead)) {
            Coef inv = ops.inv(lead);
            num_ = num_.mul_coef(inv);
            den_ = den_.mul_coef(inv);
        }
    }
}

RatFunc RatFunc::from_poly(MPoly p) {
    DomainOps ops{p.domain()};
    MPoly one = MPoly::constant(p.domain(), p.vars(), ops.one());
    return RatFunc(std::move(p), std::move(one));
}

bool RatFunc::is_poly() const {
    if (den_.is_constant()) {
        DomainOps ops{den_.domain()};
        return ops.is_one(den_.constant_value());
    }
    return false;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw Error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

RatFunc MPoly::substitute(size_t var, const RatFunc& r) const {
    if (r.is_poly()) return RatFunc::from_poly(substitute(var, r.num()));
    int d = degree(var);
    if (d <= 0) return RatFunc::from_poly(*this);
    // homogenized Horner: sum c_k num^k den^(d-k) over den^d
    MPoly acc = coeff_in(var, static_cast<uint32_t>(d));
    for (int k = d - 1; k >= 0; --k)
        acc = acc * r.num() + coeff_in(var, static_cast<uint32_t>(k)) * r.den().pow(
                                  static_cast<unsigned long>(d - k));
    return RatFunc(acc, r.den().pow(static_cast<unsigned long>(d)));
}

RatFunc MPoly::substitute(const std::string& var, const RatFunc& r) const {
    return substitute(var_index(var), r);
}

RatFunc RatFunc::substitute(const std::string& var, const MPoly& r) const {
    return RatFunc(num_.substitute(var, r), den_.substitute(var, r));
}

RatFunc RatFunc::substitute(const std::string& var, const RatFunc& r) const {
    RatFunc n = num_.substitute(var, r);
    RatFunc d = den_.substitute(var, r);
    return n / d;
}

}  // namespace pellforge
