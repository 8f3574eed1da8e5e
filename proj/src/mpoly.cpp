#include "pellforge/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace pellforge {

namespace {

// Lexicographic compare of equal-length exponent rows, descending order:
// returns true if a should come before b.
bool lex_before(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

int lex_cmp(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

bool packable(size_t nvars, const std::vector<uint32_t>& maxdeg) {
    if (nvars > 8) return false;
    for (uint32_t d : maxdeg)
        if (d >= 256) return false;
    return true;
}

uint64_t pack_key(std::span<const uint32_t> e) {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k |= static_cast<uint64_t>(e[i] & 0xff) << (8 * (7 - i));
    return k;
}

void unpack_key(uint64_t k, size_t nvars, uint32_t* out) {
    for (size_t i = 0; i < nvars; ++i) out[i] = static_cast<uint32_t>((k >> (8 * (7 - i))) & 0xff);
}

std::vector<uint32_t> max_degrees(const MPoly& p) {
    std::vector<uint32_t> d(p.nvars(), 0);
    for (size_t t = 0; t < p.nterms(); ++t) {
        auto e = p.exps(t);
        for (size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], e[i]);
    }
    return d;
}

}  // namespace

// Accumulates terms and finalizes to canonical form. Chooses a packed uint64
// representation when the exponents fit in a byte each (the project's hot
// paths have <= 6 active variables).
class MPolyBuilder {
public:
    MPolyBuilder(const MPoly& proto, bool use_packed)
        : dom_(proto.domain()), ops_(proto.ops()), vars_(proto.vars()), packed_(use_packed) {}

    void add(std::span<const uint32_t> e, const Coef& c) {
        if (ops_.is_zero(c)) return;
        if (packed_) {
            auto [it, fresh] = pk_.try_emplace(pack_key(e), c);
            if (!fresh) it->second = ops_.add(it->second, c);
        } else {
            std::vector<uint32_t> key(e.begin(), e.end());
            auto [it, fresh] = gen_.try_emplace(std::move(key), c);
            if (!fresh) it->second = ops_.add(it->second, c);
        }
    }

    void add_product(std::span<const uint32_t> ea, const Coef& ca, std::span<const uint32_t> eb,
                     const Coef& cb) {
        Coef c = ops_.mul(ca, cb);
        if (ops_.is_zero(c)) return;
        if (packed_) {
            uint64_t k = pack_key(ea) + pack_key(eb);
            auto [it, fresh] = pk_.try_emplace(k, std::move(c));
            if (!fresh) it->second = ops_.add(it->second, c);
        } else {
            std::vector<uint32_t> key(ea.size());
            for (size_t i = 0; i < key.size(); ++i) key[i] = ea[i] + eb[i];
            auto [it, fresh] = gen_.try_emplace(std::move(key), std::move(c));
            if (!fresh) it->second = ops_.add(it->second, c);
        }
    }

    MPoly finish() {
        MPoly out(dom_, vars_);
        const size_t nv = vars_->size();
        if (packed_) {
            std::vector<uint64_t> keys;
            keys.reserve(pk_.size());
            for (auto& kv : pk_)
                if (!ops_.is_zero(kv.second)) keys.push_back(kv.first);
            std::sort(keys.begin(), keys.end(), std::greater<>());
            out.exps_.resize(keys.size() * nv);
            out.coefs_.reserve(keys.size());
            for (size_t i = 0; i < keys.size(); ++i) {
                unpack_key(keys[i], nv, out.exps_.data() + i * nv);
                out.coefs_.push_back(std::move(pk_.at(keys[i])));
            }
        } else {
            for (auto& kv : gen_) {
                if (ops_.is_zero(kv.second)) continue;
                out.exps_.insert(out.exps_.end(), kv.first.begin(), kv.first.end());
                out.coefs_.push_back(std::move(kv.second));
            }
        }
        return out;
    }

private:
    struct VecGreater {
        bool operator()(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
            return lex_before(a, b);
        }
    };
    CoefDomain dom_;
    DomainOps ops_;
    VarList vars_;
    bool packed_;
    std::unordered_map<uint64_t, Coef> pk_;
    std::map<std::vector<uint32_t>, Coef, VecGreater> gen_;
};

MPoly::MPoly(CoefDomain dom, VarList vars)
    : dom_(std::move(dom)), ops_(dom_), vars_(std::move(vars)) {
    if (!vars_) throw Error("MPoly: null variable list");
}

MPoly MPoly::constant(const CoefDomain& dom, const VarList& vars, const Coef& c) {
    MPoly p(dom, vars);
    if (!p.ops_.is_zero(c)) {
        p.exps_.assign(vars->size(), 0);
        p.coefs_.push_back(c);
    }
    return p;
}

MPoly MPoly::from_int(const CoefDomain& dom, const VarList& vars, const Int& v) {
    DomainOps ops{dom};
    return constant(dom, vars, ops.from_int(v));
}

MPoly MPoly::variable(const CoefDomain& dom, const VarList& vars, const std::string& name) {
    MPoly p(dom, vars);
    size_t idx = p.var_index(name);
    p.exps_.assign(vars->size(), 0);
    p.exps_[idx] = 1;
    p.coefs_.push_back(p.ops_.one());
    return p;
}

MPoly MPoly::from_terms(const CoefDomain& dom, const VarList& vars,
                        std::vector<std::pair<std::vector<uint32_t>, Coef>> terms) {
    MPoly proto(dom, vars);
    MPolyBuilder b(proto, false);
    for (auto& [e, c] : terms) {
        if (e.size() != vars->size()) throw Error("MPoly::from_terms: exponent arity mismatch");
        b.add(e, c);
    }
    return b.finish();
}

size_t MPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    throw UnknownVariable("unknown variable: " + name);
}

bool MPoly::is_constant() const {
    if (coefs_.empty()) return true;
    if (coefs_.size() != 1) return false;
    auto e = exps(0);
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

Coef MPoly::constant_value() const {
    if (is_zero()) return ops_.zero();
    if (!is_constant()) throw Error("MPoly: not a constant");
    return coefs_[0];
}

int MPoly::degree(size_t var) const {
    int d = -1;
    for (size_t t = 0; t < nterms(); ++t) d = std::max(d, static_cast<int>(exps(t)[var]));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (size_t t = 0; t < nterms(); ++t) {
        auto e = exps(t);
        int s = 0;
        for (uint32_t x : e) s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

void MPoly::assert_compatible(const MPoly& o) const {
    if (dom_ != o.dom_) throw DomainMismatch("MPoly: mixed coefficient domains");
    if (vars_ != o.vars_ && *vars_ != *o.vars_)
        throw DomainMismatch("MPoly: incompatible variable sets");
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert_compatible(o);
    MPoly out(dom_, vars_);
    const size_t nv = nvars();
    out.exps_.reserve(exps_.size() + o.exps_.size());
    out.coefs_.reserve(coefs_.size() + o.coefs_.size());
    size_t i = 0, j = 0;
    while (i < nterms() || j < o.nterms()) {
        int c;
        if (i == nterms())
            c = -1;
        else if (j == o.nterms())
            c = 1;
        else
            c = lex_cmp(exps(i), o.exps(j));
        if (c > 0) {
            out.exps_.insert(out.exps_.end(), exps(i).begin(), exps(i).end());
            out.coefs_.push_back(coefs_[i]);
            ++i;
        } else if (c < 0) {
            out.exps_.insert(out.exps_.end(), o.exps(j).begin(), o.exps(j).end());
            out.coefs_.push_back(o.coefs_[j]);
            ++j;
        } else {
            Coef s = ops_.add(coefs_[i], o.coefs_[j]);
            if (!ops_.is_zero(s)) {
                out.exps_.insert(out.exps_.end(), exps(i).begin(), exps(i).end());
                out.coefs_.push_back(std::move(s));
            }
            ++i;
            ++j;
        }
    }
    (void)nv;
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& c : out.coefs_) c = ops_.neg(c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    assert_compatible(o);
    if (is_zero() || o.is_zero()) return MPoly(dom_, vars_);
    auto da = max_degrees(*this), db = max_degrees(o);
    std::vector<uint32_t> dm(nvars());
    for (size_t i = 0; i < dm.size(); ++i) dm[i] = da[i] + db[i];
    MPolyBuilder b(*this, packable(nvars(), dm));
    // iterate smaller operand outside
    const MPoly& small = nterms() <= o.nterms() ? *this : o;
    const MPoly& big = nterms() <= o.nterms() ? o : *this;
    for (size_t i = 0; i < small.nterms(); ++i)
        for (size_t j = 0; j < big.nterms(); ++j)
            b.add_product(small.exps(i), small.coef(i), big.exps(j), big.coef(j));
    return b.finish();
}

bool MPoly::operator==(const MPoly& o) const {
    if (dom_ != o.dom_) return false;
    if (vars_ != o.vars_ && *vars_ != *o.vars_) return false;
    if (exps_ != o.exps_) return false;
    for (size_t i = 0; i < coefs_.size(); ++i)
        if (!ops_.eq(coefs_[i], o.coefs_[i])) return false;
    return true;
}

MPoly MPoly::mul_coef(const Coef& c) const {
    if (ops_.is_zero(c)) return MPoly(dom_, vars_);
    MPoly out = *this;
    bool may_vanish = dom_.kind() == DomainKind::ModPrimePower;
    if (!may_vanish) {
        for (auto& x : out.coefs_) x = ops_.mul(x, c);
        return out;
    }
    // products can vanish mod p^k; rebuild canonically
    MPolyBuilder b(*this, false);
    for (size_t i = 0; i < nterms(); ++i) b.add(exps(i), ops_.mul(coefs_[i], c));
    return b.finish();
}

MPoly MPoly::mul_var_power(size_t var, uint32_t e) const {
    MPoly out = *this;
    for (size_t t = 0; t < out.nterms(); ++t) out.exps_[t * nvars() + var] += e;
    return out;
}

MPoly MPoly::pow(unsigned long n) const {
    MPoly acc = MPoly::constant(dom_, vars_, ops_.one());
    MPoly base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

std::pair<MPoly, MPoly> MPoly::divmod_leadterm(const MPoly& o) const {
    assert_compatible(o);
    if (o.is_zero()) throw Error("MPoly: division by zero polynomial");
    const size_t nv = nvars();
    auto ltB = o.exps(0);
    const Coef& lcB = o.coef(0);

    // remainder kept in an ordered map for leading-term extraction
    struct VecGreater {
        bool operator()(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
            return lex_before(a, b);
        }
    };
    std::map<std::vector<uint32_t>, Coef, VecGreater> R;
    for (size_t i = 0; i < nterms(); ++i)
        R.emplace(std::vector<uint32_t>(exps(i).begin(), exps(i).end()), coefs_[i]);

    std::vector<std::pair<std::vector<uint32_t>, Coef>> qterms, rterms;
    while (!R.empty()) {
        auto it = R.begin();
        std::vector<uint32_t> lt = it->first;
        Coef lc = it->second;
        R.erase(it);
        if (ops_.is_zero(lc)) continue;
        bool div_ok = true;
        std::vector<uint32_t> m(nv);
        for (size_t i = 0; i < nv; ++i) {
            if (lt[i] < ltB[i]) {
                div_ok = false;
                break;
            }
            m[i] = lt[i] - ltB[i];
        }
        Coef q;
        if (div_ok) {
            try {
                q = ops_.div(lc, lcB);
            } catch (const InexactDivision&) {
                div_ok = false;
            }
        }
        if (!div_ok) {
            rterms.emplace_back(std::move(lt), std::move(lc));
            continue;
        }
        // R -= q * x^m * o   (skip o's leading term, it cancels exactly)
        for (size_t j = 1; j < o.nterms(); ++j) {
            auto ej = o.exps(j);
            std::vector<uint32_t> key(nv);
            for (size_t i = 0; i < nv; ++i) key[i] = m[i] + ej[i];
            Coef prod = ops_.mul(q, o.coef(j));
            auto [rit, fresh] = R.try_emplace(std::move(key), ops_.neg(prod));
            if (!fresh) {
                rit->second = ops_.sub(rit->second, prod);
                if (ops_.is_zero(rit->second)) R.erase(rit);
            }
        }
        qterms.emplace_back(std::move(m), std::move(q));
    }
    return {from_terms(dom_, vars_, std::move(qterms)), from_terms(dom_, vars_, std::move(rterms))};
}

MPoly MPoly::exact_div(const MPoly& o) const {
    auto [q, r] = divmod_leadterm(o);
    if (!r.is_zero()) throw InexactDivision("MPoly: inexact polynomial division");
    return q;
}

MPoly MPoly::coeff_in(size_t var, uint32_t d) const {
    if (var >= nvars()) throw UnknownVariable("coeff_in: variable index out of range");
    MPoly out(dom_, vars_);
    const size_t nv = nvars();
    for (size_t t = 0; t < nterms(); ++t) {
        auto e = exps(t);
        if (e[var] != d) continue;
        size_t base = out.exps_.size();
        out.exps_.insert(out.exps_.end(), e.begin(), e.end());
        out.exps_[base + var] = 0;
        out.coefs_.push_back(coefs_[t]);
    }
    return out;  // term order preserved: zeroing one shared coordinate keeps lex order
}

MPoly MPoly::leading_coeff(size_t var) const {
    int d = degree(var);
    if (d < 0) return MPoly(dom_, vars_);
    return coeff_in(var, static_cast<uint32_t>(d));
}

MPoly MPoly::derivative(size_t var) const {
    std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
    for (size_t t = 0; t < nterms(); ++t) {
        auto e = exps(t);
        if (e[var] == 0) continue;
        std::vector<uint32_t> ne(e.begin(), e.end());
        Coef c = ops_.mul(coefs_[t], ops_.from_int(Int(e[var])));
        ne[var] -= 1;
        terms.emplace_back(std::move(ne), std::move(c));
    }
    return from_terms(dom_, vars_, std::move(terms));
}

MPoly MPoly::substitute(size_t var, const MPoly& r) const {
    assert_compatible(r);
    int d = degree(var);
    if (d <= 0) return *this;
    // Horner from the top degree down.
    MPoly acc = coeff_in(var, static_cast<uint32_t>(d));
    for (int k = d - 1; k >= 0; --k) acc = acc * r + coeff_in(var, static_cast<uint32_t>(k));
    return acc;
}

Coef MPoly::evaluate(const std::vector<Coef>& point) const {
    if (point.size() != nvars()) throw Error("MPoly::evaluate: wrong point arity");
    // Precompute powers per variable.
    std::vector<std::vector<Coef>> pw(nvars());
    for (size_t v = 0; v < nvars(); ++v) {
        int d = degree(v);
        pw[v].reserve(d + 1);
        pw[v].push_back(ops_.one());
        for (int e = 1; e <= d; ++e) pw[v].push_back(ops_.mul(pw[v].back(), point[v]));
    }
    Coef acc = ops_.zero();
    for (size_t t = 0; t < nterms(); ++t) {
        Coef term = coefs_[t];
        auto e = exps(t);
        for (size_t v = 0; v < nvars(); ++v)
            if (e[v]) term = ops_.mul(term, pw[v][e[v]]);
        acc = ops_.add(acc, term);
    }
    return acc;
}

MPoly MPoly::evaluate_partial(size_t var, const Coef& val) const {
    int d = degree(var);
    std::vector<Coef> pw;
    pw.push_back(ops_.one());
    for (int e = 1; e <= d; ++e) pw.push_back(ops_.mul(pw.back(), val));
    MPolyBuilder b(*this, false);
    const size_t nv = nvars();
    for (size_t t = 0; t < nterms(); ++t) {
        auto e = exps(t);
        std::vector<uint32_t> ne(e.begin(), e.end());
        Coef c = e[var] ? ops_.mul(coefs_[t], pw[e[var]]) : coefs_[t];
        ne[var] = 0;
        b.add(ne, c);
    }
    (void)nv;
    return b.finish();
}

std::pair<Int, MPoly> MPoly::content_primitive() const {
    if (dom_.kind() != DomainKind::Integer)
        throw DomainMismatch("content_primitive: integer domain required");
    if (is_zero()) return {Int(0), MPoly(dom_, vars_)};
    Int g = 0;
    for (const auto& c : coefs_) g = gcd_int(g, std::get<Int>(c));
    if (sgn(std::get<Int>(coefs_[0])) < 0) g = -g;
    MPoly p = *this;
    for (auto& c : p.coefs_) c = Int(std::get<Int>(c) / g);
    return {g, p};
}

std::pair<Rat, MPoly> MPoly::to_integer_cleared() const {
    if (dom_.kind() == DomainKind::Integer) {
        auto [c, p] = content_primitive();
        return {Rat(c), p};
    }
    if (dom_.kind() != DomainKind::Rational)
        throw DomainMismatch("to_integer_cleared: rational domain required");
    if (is_zero()) return {Rat(0), MPoly(CoefDomain::integers(), vars_)};
    Int den = 1;
    for (const auto& c : coefs_) den = lcm_int(den, Int(std::get<Rat>(c).get_den()));
    MPoly zp(CoefDomain::integers(), vars_);
    zp.exps_ = exps_;
    zp.coefs_.reserve(coefs_.size());
    Int g = 0;
    std::vector<Int> zc;
    for (const auto& c : coefs_) {
        const Rat& r = std::get<Rat>(c);
        Int v = Int(r.get_num()) * (den / Int(r.get_den()));
        g = gcd_int(g, v);
        zc.push_back(v);
    }
    if (sgn(zc[0]) < 0) g = -g;
    for (auto& v : zc) zp.coefs_.push_back(Int(v / g));
    return {Rat(g, den), zp};
}

MPoly MPoly::to_domain(const CoefDomain& nd) const {
    if (nd == dom_) return *this;
    DomainOps nops{nd};
    MPolyBuilder b(MPoly(nd, vars_), false);
    for (size_t t = 0; t < nterms(); ++t) {
        const Coef& c = coefs_[t];
        Coef nc;
        switch (dom_.kind()) {
            case DomainKind::Integer:
                nc = nops.from_int(std::get<Int>(c));
                break;
            case DomainKind::Rational:
                nc = nops.from_rat(std::get<Rat>(c));
                break;
            case DomainKind::ModPrimePower:
            case DomainKind::PrimeField:
                // only precision changes within the same prime
                if (!nd.is_modular() || nd.prime() != dom_.prime())
                    throw DomainMismatch("to_domain: incompatible modular conversion");
                nc = nops.from_int(std::get<Int>(c));
                break;
            case DomainKind::NumberFieldK: {
                const NFElem& e = std::get<NFElem>(c);
                if (!e.is_rational())
                    throw DomainMismatch("to_domain: non-rational number-field coefficient");
                nc = nops.from_rat(e.rational_part());
                break;
            }
        }
        b.add(exps(t), nc);
    }
    return b.finish();
}

MPoly MPoly::with_vars(const VarList& nv) const {
    std::vector<size_t> where(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(nv->begin(), nv->end(), (*vars_)[i]);
        if (it == nv->end()) {
            if (degree(i) > 0)
                throw UnknownVariable("with_vars: variable " + (*vars_)[i] + " not in target set");
            where[i] = SIZE_MAX;
        } else {
            where[i] = static_cast<size_t>(it - nv->begin());
        }
    }
    std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
    terms.reserve(nterms());
    for (size_t t = 0; t < nterms(); ++t) {
        std::vector<uint32_t> ne(nv->size(), 0);
        auto e = exps(t);
        for (size_t i = 0; i < nvars(); ++i)
            if (e[i]) ne[where[i]] = e[i];
        terms.emplace_back(std::move(ne), coefs_[t]);
    }
    return from_terms(dom_, nv, std::move(terms));
}

Coef eval_univariate(const MPoly& P, const Coef& x) {
    size_t var = 0;
    bool found = false;
    for (size_t v = 0; v < P.nvars(); ++v) {
        if (P.degree(v) > 0) {
            if (found) throw Error("eval_univariate: polynomial not univariate");
            var = v;
            found = true;
        }
    }
    std::vector<Coef> point(P.nvars(), P.ops().zero());
    if (found) point[var] = x;
    return P.evaluate(point);
}

}  // namespace pellforge
