#include "pellforge/numfield.hpp"

#include <algorithm>

#include "pellforge/lll.hpp"

namespace pellforge {

MPoly nf_minpoly(const NFElem& a, const std::string& var) {
    const auto& field = a.field();
    const unsigned n = field->degree();
    auto dom = CoefDomain::rationals();
    auto vars = make_vars({var, "__aux"});
    // m(z) and x - a(z) with x = var, z = __aux
    std::vector<std::pair<std::vector<uint32_t>, Coef>> mt, at;
    for (unsigned i = 0; i <= n; ++i) {
        if (field->minpoly()[i] == 0) continue;
        mt.push_back({{0, i}, Coef(field->minpoly()[i])});
    }
    at.push_back({{1, 0}, Coef(Rat(1))});
    for (unsigned i = 0; i < n; ++i) {
        if (a.coords()[i] == 0) continue;
        at.push_back({{0, i}, Coef(Rat(-a.coords()[i]))});
    }
    MPoly m = MPoly::from_terms(dom, vars, std::move(mt));
    MPoly xa = MPoly::from_terms(dom, vars, std::move(at));
    MPoly charpoly;  // product over conjugates of (x - a(theta_i))
    if (xa.degree(1) <= 0) {
        // a rational: minpoly is x - a directly
        charpoly = xa;
    } else {
        charpoly = resultant(m, xa, static_cast<size_t>(1));
    }
    // squarefree part = the minimal polynomial (charpoly is minpoly^(n/d))
    MPoly sf = squarefree_part(charpoly.to_integer_cleared().second);
    // back to monic over Q in a single-variable list
    auto outvars = make_vars({var});
    MPoly out = sf.with_vars(outvars).to_domain(dom);
    DomainOps ops{dom};
    out = out.mul_coef(ops.inv(out.coef(0)));
    return out;
}

std::vector<Int> nf_padic_roots(const NumberFieldPtr& field, const Int& p, unsigned k,
                                std::vector<PadicRootDiagnostic>* diagnostics) {
    if (p > 1000000) throw Error("nf_padic_roots: prime too large for the root scan");
    const auto& m = field->minpoly();
    const Int mod1 = p;
    std::vector<Int> mc, dmc;
    for (const Rat& c : m) {
        auto inv = invmod(Int(c.get_den()), mod1);
        if (!inv) throw Error("nf_padic_roots: minpoly denominator divisible by p");
        mc.push_back(mod_reduce(Int(c.get_num()) * *inv, mod1));
    }
    for (size_t i = 1; i < mc.size(); ++i)
        dmc.push_back(mod_reduce(mc[i] * Int(static_cast<long>(i)), mod1));
    std::vector<Int> roots;
    long pl = mpz_get_si(p.get_mpz_t());
    for (long x = 0; x < pl; ++x) {
        Int fx = 0;
        for (auto it = mc.rbegin(); it != mc.rend(); ++it) fx = mod_reduce(fx * x + *it, mod1);
        if (fx != 0) continue;
        Int dx = 0;
        for (auto it = dmc.rbegin(); it != dmc.rend(); ++it) dx = mod_reduce(dx * x + *it, mod1);
        if (dx == 0) {
            if (diagnostics) diagnostics->push_back({Int(x), true});
            continue;
        }
        // Newton lift to p^k
        Int r(x);
        unsigned cur = 1;
        while (cur < k) {
            cur = std::min(2 * cur, k);
            Int mm = pow_int(p, cur);
            std::vector<Int> mk, dmk;
            for (const Rat& c : m)
                mk.push_back(mod_reduce(Int(c.get_num()) * *invmod(Int(c.get_den()), mm), mm));
            for (size_t i = 1; i < mk.size(); ++i)
                dmk.push_back(mod_reduce(mk[i] * Int(static_cast<long>(i)), mm));
            Int fr = 0;
            for (auto it = mk.rbegin(); it != mk.rend(); ++it) fr = mod_reduce(fr * r + *it, mm);
            Int dr = 0;
            for (auto it = dmk.rbegin(); it != dmk.rend(); ++it) dr = mod_reduce(dr * r + *it, mm);
            r = mod_reduce(r - fr * *invmod(dr, mm), mm);
        }
        roots.push_back(r);
        if (diagnostics) diagnostics->push_back({Int(x), false});
    }
    if (diagnostics && diagnostics->empty() && roots.empty()) {
        // no linear factors at all; report ramification when m is not even
        // squarefree mod p (gcd with derivative nontrivial)
        std::vector<Int> a = mc, b = dmc;
        auto degv = [](const std::vector<Int>& v) {
            int d = static_cast<int>(v.size()) - 1;
            while (d >= 0 && v[static_cast<size_t>(d)] == 0) --d;
            return d;
        };
        while (true) {
            int db = degv(b);
            if (db < 0) break;
            int da = degv(a);
            if (da < db) {
                std::swap(a, b);
                continue;
            }
            Int f = mod_reduce(a[static_cast<size_t>(da)] * *invmod(b[static_cast<size_t>(db)], mod1),
                               mod1);
            for (int i = 0; i <= db; ++i)
                a[static_cast<size_t>(da - db + i)] =
                    mod_reduce(a[static_cast<size_t>(da - db + i)] - f * b[static_cast<size_t>(i)],
                               mod1);
        }
        if (degv(a) > 0) diagnostics->push_back({Int(-1), true});
    }
    return roots;
}

Int nf_embed_mod(const NFElem& a, const Int& p, unsigned k, const Int& root) {
    const Int m = pow_int(p, k);
    Int acc = 0, tp = 1;
    for (const Rat& c : a.coords()) {
        auto inv = invmod(Int(c.get_den()), m);
        if (!inv) throw Error("nf_embed_mod: denominator not invertible mod p");
        acc = mod_reduce(acc + Int(c.get_num()) * *inv % m * tp, m);
        tp = mod_reduce(tp * root, m);
    }
    return acc;
}

std::optional<NFElem> nf_recognize(const NumberFieldPtr& field, const Int& value, const Int& p,
                                   unsigned k, const Int& root) {
    const unsigned n = field->degree();
    const Int M = pow_int(p, k);
    const Int S = pow_int(Int(2), 48);  // weight on the congruence column
    // rows: theta^i embeddings, the value, and the modulus
    IntMat basis;
    std::vector<Int> tpow(n);
    tpow[0] = 1;
    for (unsigned i = 1; i < n; ++i) tpow[i] = mod_reduce(tpow[i - 1] * root, M);
    for (unsigned i = 0; i < n; ++i) {
        IntRow row(n + 2, 0);
        row[i] = 1;
        row[n + 1] = tpow[i] * S;
        basis.push_back(std::move(row));
    }
    {
        IntRow row(n + 2, 0);
        row[n] = 1;
        row[n + 1] = mod_reduce(value, M) * S;
        basis.push_back(std::move(row));
    }
    {
        IntRow row(n + 2, 0);
        row[n + 1] = M * S;
        basis.push_back(std::move(row));
    }
    IntMat red = lll_reduce_rows(basis);
    for (const auto& v : red) {
        if (v[n + 1] != 0) continue;  // congruence not exact
        const Int& b = v[n];
        if (b == 0) continue;
        std::vector<Rat> coords;
        for (unsigned i = 0; i < n; ++i) {
            Rat c(-v[i], b);
            c.canonicalize();
            coords.push_back(c);
        }
        NFElem cand(field, std::move(coords));
        // the congruence check is part of the construction; denominators
        // coprime to p are still required for a meaningful answer
        if (gcd_int(cand.denominator(), p) != 1) continue;
        return cand;
    }
    return std::nullopt;
}

std::optional<NFElem> nf_sqrt(const NFElem& c) {
    if (c.is_zero()) return c;
    const auto& field = c.field();
    static const long kPrimes[] = {17, 29, 37, 41, 53, 61, 73, 89, 101};
    for (unsigned k : {64u, 128u, 256u}) {
        for (long pl : kPrimes) {
            Int p(pl);
            std::vector<Int> roots;
            try {
                roots = nf_padic_roots(field, p, k);
            } catch (const Error&) {
                continue;
            }
            for (const Int& root : roots) {
                Int cv;
                try {
                    cv = nf_embed_mod(c, p, k, root);
                } catch (const Error&) {
                    continue;
                }
                if (cv % p == 0) continue;  // avoid valuation bookkeeping
                auto s = sqrt_mod_prime_power(cv, p, k);
                if (!s) return std::nullopt;  // squares embed to squares
                for (const Int& branch : {*s, Int(pow_int(p, k) - *s)}) {
                    auto cand = nf_recognize(field, branch, p, k, root);
                    if (cand && (*cand) * (*cand) == c) {
                        // deterministic branch: first nonzero coordinate positive
                        for (const Rat& x : cand->coords()) {
                            if (x == 0) continue;
                            if (x < 0) *cand = -*cand;
                            break;
                        }
                        return cand;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<NFElem> nf_univariate_roots(const MPoly& f) {
    if (f.domain().kind() != DomainKind::NumberFieldK)
        throw DomainMismatch("nf_univariate_roots: number-field domain required");
    const auto& field = f.domain().field();
    size_t var = SIZE_MAX;
    for (size_t v = 0; v < f.nvars(); ++v) {
        if (f.degree(v) > 0) {
            if (var != SIZE_MAX) throw Error("nf_univariate_roots: univariate input required");
            var = v;
        }
    }
    std::vector<NFElem> out;
    if (var == SIZE_MAX) return out;
    static const long kPrimes[] = {17, 29, 37, 41, 53, 61, 73};
    for (unsigned k : {64u, 128u}) {
        for (long pl : kPrimes) {
            Int p(pl);
            std::vector<Int> roots;
            try {
                roots = nf_padic_roots(field, p, k);
            } catch (const Error&) {
                continue;
            }
            for (const Int& fr : roots) {
                MPoly fp;
                try {
                    fp = embed_nf_mod(f, p, k, fr);
                } catch (const Error&) {
                    continue;
                }
                const Int M = pow_int(p, k);
                // dense coefficients mod p^k
                int d = fp.degree(var);
                if (d < 0) continue;
                std::vector<Int> fc(static_cast<size_t>(d) + 1, Int(0));
                for (size_t t = 0; t < fp.nterms(); ++t)
                    fc[fp.exps(t)[var]] = std::get<Int>(fp.coef(t));
                std::vector<Int> dfc;
                for (size_t i = 1; i < fc.size(); ++i)
                    dfc.push_back(mod_reduce(fc[i] * Int(static_cast<long>(i)), M));
                long plv = mpz_get_si(p.get_mpz_t());
                for (long x = 0; x < plv; ++x) {
                    Int fx = 0;
                    for (auto it = fc.rbegin(); it != fc.rend(); ++it)
                        fx = mod_reduce(fx * x + *it, p);
                    if (fx != 0) continue;
                    Int dx = 0;
                    for (auto it = dfc.rbegin(); it != dfc.rend(); ++it)
                        dx = mod_reduce(dx * x + *it, p);
                    if (dx % p == 0) continue;  // only simple roots lift here
                    Int r(x);
                    unsigned cur = 1;
                    while (cur < k) {
                        cur = std::min(2 * cur, k);
                        Int mm = pow_int(p, cur);
                        Int frv = 0;
                        for (auto it = fc.rbegin(); it != fc.rend(); ++it)
                            frv = mod_reduce(frv * r + *it, mm);
                        Int drv = 0;
                        for (auto it = dfc.rbegin(); it != dfc.rend(); ++it)
                            drv = mod_reduce(drv * r + *it, mm);
                        r = mod_reduce(r - frv * *invmod(drv, mm), mm);
                    }
                    auto cand = nf_recognize(field, r, p, k, fr);
                    if (!cand) continue;
                    // exact verification
                    Coef val = eval_univariate(f, Coef(*cand));
                    if (!std::get<NFElem>(val).is_zero()) continue;
                    if (std::none_of(out.begin(), out.end(),
                                     [&](const NFElem& e) { return e == *cand; }))
                        out.push_back(*cand);
                }
            }
            if (!out.empty()) return out;
        }
    }
    return out;
}

}  // namespace pellforge
