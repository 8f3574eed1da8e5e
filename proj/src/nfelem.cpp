#include "pellforge/nfelem.hpp"

#include <algorithm>
#include <sstream>

namespace pellforge {

namespace {

// Trial factorisation of a monic integer polynomial mod p into a rational
// linear factor: if m has a root r mod p for every p in a list AND the lifted
// rational candidate divides exactly over Q, irreducibility is contradicted.
// We keep this probabilistic and cheap; fields here come from the paper or
// from verified algdep output.
bool certified_reducible(const std::vector<Rat>& m) {
    // Only the rational-root certificate: a monic integer polynomial with a
    // rational root has an integer root dividing the constant term.
    // Clear denominators first.
    Int den = 1;
    for (const auto& c : m) den = lcm_int(den, Int(c.get_den()));
    std::vector<Int> zi;
    zi.reserve(m.size());
    for (const auto& c : m) zi.push_back(Int(c.get_num()) * (den / Int(c.get_den())));
    const Int c0 = zi.front();
    if (c0 == 0) return true;  // z | m
    // Try small divisors of |c0| only; this is a cheap screen, not a proof.
    std::vector<Int> cands;
    for (Int d = 1; d * d <= abs(c0) && d < 100000; ++d) {
        if (abs(c0) % d == 0) {
            cands.push_back(d);
            cands.push_back(abs(c0) / d);
        }
    }
    for (const Int& a : cands) {
        for (int s : {1, -1}) {
            Int r = s * a;
            Int acc = 0;
            for (auto it = zi.rbegin(); it != zi.rend(); ++it) acc = acc * r + *it;
            if (acc == 0) return true;
        }
    }
    return false;
}

}  // namespace

NumberField::NumberField(std::vector<Rat> minpoly, std::string var)
    : minpoly_(std::move(minpoly)), var_(std::move(var)) {
    if (minpoly_.size() < 2) throw Error("NumberField: degree must be >= 1");
    if (minpoly_.back() != 1) throw Error("NumberField: minpoly must be monic");
    if (minpoly_.size() > 2 && certified_reducible(minpoly_))
        throw Error("NumberField: minpoly has a rational root, not irreducible");
}

NFElem::NFElem(NumberFieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw Error("NFElem: null field");
    coords_.resize(field_->degree(), Rat(0));
    for (auto& c : coords_) c.canonicalize();
}

NFElem NFElem::from_rational(NumberFieldPtr field, const Rat& r) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = r;
    return NFElem(std::move(field), std::move(c));
}

NFElem NFElem::generator(NumberFieldPtr field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    if (c.size() < 2) throw Error("NFElem: generator needs degree >= 2");
    c[1] = 1;
    return NFElem(std::move(field), std::move(c));
}

bool NFElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

void NFElem::check_compatible(const NFElem& o) const {
    if (!field_ || !o.field_ || !(*field_ == *o.field_))
        throw DomainMismatch("NFElem: elements of different fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_compatible(o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const {
    check_compatible(o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-() const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x = -x;
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator*(const Rat& r) const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x *= r;
    return NFElem(field_, std::move(c));
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_compatible(o);
    const unsigned n = field_->degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (unsigned i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    // reduce by the monic minpoly: theta^n = -(m_0 + m_1 theta + ...)
    const auto& m = field_->minpoly();
    for (unsigned d = 2 * n - 2; d >= n; --d) {
        if (prod[d] == 0) continue;
        Rat lead = prod[d];
        prod[d] = 0;
        for (unsigned j = 0; j < n; ++j) prod[d - n + j] -= lead * m[j];
    }
    prod.resize(n);
    return NFElem(field_, std::move(prod));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw Error("NFElem: division by zero");
    // Extended Euclid of coords-poly with minpoly over Q.
    const unsigned n = field_->degree();
    std::vector<Rat> r0 = field_->minpoly();
    std::vector<Rat> r1 = coords_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{};  // coefficient of *this in r0 (zero)
    std::vector<Rat> s1{Rat(1)};
    auto degp = [](const std::vector<Rat>& v) { return static_cast<int>(v.size()) - 1; };
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (degp(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<int>(degp(r0) - degp(r1) + 1, 0), Rat(0));
        std::vector<Rat> rem = r0;
        while (degp(rem) >= degp(r1)) {
            Rat c = rem.back() / r1.back();
            int shift = degp(rem) - degp(r1);
            q[shift] += c;
            for (int i = 0; i <= degp(r1); ++i) rem[i + shift] -= c * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw Error("NFElem: not invertible (minpoly not squarefree?)");
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    std::vector<Rat> inv(n, Rat(0));
    for (size_t i = 0; i < s1.size() && i < n; ++i) inv[i] = s1[i] / r1[0];
    return NFElem(field_, std::move(inv));
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElem base = *this;
    NFElem acc = NFElem::from_rational(field_, Rat(1));
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const {
    if (!field_ || !o.field_) return coords_ == o.coords_;
    check_compatible(o);
    return coords_ == o.coords_;
}

Rat NFElem::norm() const {
    const unsigned n = field_->degree();
    // Multiplication matrix: column j = coords of this * theta^j.
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    NFElem cur = *this;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) M[i][j] = cur.coords()[i];
        if (j + 1 < n) cur = cur * NFElem::generator(field_);
    }
    // Gaussian elimination over Q.
    Rat det(1);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        Rat inv = Rat(1) / M[c][c];
        for (unsigned r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            Rat f = M[r][c] * inv;
            for (unsigned k = c; k < n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det;
}

Int NFElem::denominator() const {
    Int d = 1;
    for (const auto& c : coords_) d = lcm_int(d, Int(c.get_den()));
    return d;
}

std::string NFElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    Int den = denominator();
    if (den != 1) os << "(";
    for (size_t i = coords_.size(); i-- > 0;) {
        Rat c = coords_[i] * Rat(den);
        if (c == 0) continue;
        Int ci(c.get_num());
        if (!first && ci > 0) os << "+";
        if (ci == -1 && i > 0)
            os << "-";
        else if (!(ci == 1 && i > 0))
            os << ci.get_str();
        if (i > 0) {
            if (abs(ci) != 1) os << "*";
            os << field_->var();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    if (den != 1) os << ")/" << den.get_str();
    return os.str();
}

RelQuadElem RelQuadElem::mul(const RelQuadElem& o, const NFElem& c2) const {
    return {u * o.u + c2 * (v * o.v), u * o.v + v * o.u};
}

RelQuadElem RelQuadElem::pow(long e, const NFElem& c2) const {
    RelQuadElem base = *this;
    if (e < 0) {
        base = conjugate();  // valid for relative norm 1
        e = -e;
    }
    RelQuadElem acc{NFElem::from_rational(u.field(), Rat(1)),
                    NFElem::from_rational(u.field(), Rat(0))};
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc.mul(base, c2);
        base = base.mul(base, c2);
        n >>= 1;
    }
    return acc;
}

NFElem RelQuadElem::relative_norm(const NFElem& c2) const { return u * u - c2 * (v * v); }

}  // namespace pellforge
