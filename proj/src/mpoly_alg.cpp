#include <algorithm>
#include <map>

#include "pellforge/mpoly.hpp"

namespace pellforge {

MPoly pseudo_rem(const MPoly& A, const MPoly& B, size_t var) {
    int dB = B.degree(var);
    if (dB < 0) throw Error("pseudo_rem: zero divisor");
    MPoly lB = B.leading_coeff(var);
    MPoly Btail = B - lB.mul_var_power(var, static_cast<uint32_t>(dB));
    MPoly R = A;
    int dA = A.degree(var);
    int needed = std::max(dA - dB + 1, 0);
    int steps = 0;
    while (!R.is_zero()) {
        int dR = R.degree(var);
        if (dR < dB) break;
        MPoly lR = R.leading_coeff(var);
        MPoly Rtail = R - lR.mul_var_power(var, static_cast<uint32_t>(dR));
        R = Rtail * lB - lR.mul_var_power(var, static_cast<uint32_t>(dR - dB)) * Btail;
        ++steps;
    }
    // degree may drop early; make up the missing lc(B) factors so that
    // lc(B)^(dA-dB+1) * A = Q*B + R holds exactly
    for (int i = steps; i < needed; ++i) R = R * lB;
    return R;
}

namespace {

MPoly content_wrt(const MPoly& P, size_t var);

// Primitive PRS gcd; result primitive with positive leading coefficient over
// the integers, monic over field domains.
MPoly gcd_impl(MPoly A, MPoly B) {
    const CoefDomain& dom = A.domain();
    DomainOps ops{dom};
    auto normalize = [&](MPoly g) {
        if (g.is_zero()) return g;
        if (dom.kind() == DomainKind::Integer) {
            auto [c, p] = g.content_primitive();
            (void)c;
            return p;
        }
        if (dom.is_field() || dom.kind() == DomainKind::NumberFieldK) {
            return g.mul_coef(ops.inv(g.coef(0)));  // monic in the lex-leading sense
        }
        return g;
    };
    if (A.is_zero()) return normalize(B);
    if (B.is_zero()) return normalize(A);
    if (A.is_constant() || B.is_constant()) {
        if (dom.kind() == DomainKind::Integer) {
            Int g = 0;
            for (size_t i = 0; i < A.nterms(); ++i) g = gcd_int(g, std::get<Int>(A.coef(i)));
            for (size_t i = 0; i < B.nterms(); ++i) g = gcd_int(g, std::get<Int>(B.coef(i)));
            return MPoly::constant(dom, A.vars(), Coef(g));
        }
        return MPoly::constant(dom, A.vars(), ops.one());
    }
    // main variable: lowest index with positive degree in either
    size_t var = 0;
    for (size_t v = 0; v < A.nvars(); ++v) {
        if (A.degree(v) > 0 || B.degree(v) > 0) {
            var = v;
            break;
        }
    }
    MPoly ca = content_wrt(A, var), cb = content_wrt(B, var);
    MPoly ppA = A.exact_div(ca), ppB = B.exact_div(cb);
    if (ppA.degree(var) < ppB.degree(var)) std::swap(ppA, ppB);
    while (true) {
        if (ppB.is_zero()) break;
        if (ppB.degree(var) == 0) {
            ppA = MPoly::constant(dom, A.vars(), ops.one());
            ppB = MPoly();
            ppB = MPoly(dom, A.vars());
            break;
        }
        MPoly R = pseudo_rem(ppA, ppB, var);
        ppA = std::move(ppB);
        ppB = R.is_zero() ? R : R.exact_div(content_wrt(R, var));
    }
    MPoly g = ppA.exact_div(content_wrt(ppA, var));
    return normalize(g * gcd_impl(ca, cb));
}

// Content of P with respect to var: gcd of the coefficient polynomials.
MPoly content_wrt(const MPoly& P, size_t var) {
    DomainOps ops{P.domain()};
    MPoly g(P.domain(), P.vars());
    int d = P.degree(var);
    for (int k = d; k >= 0; --k) {
        MPoly c = P.coeff_in(var, static_cast<uint32_t>(k));
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant() && P.domain().is_field()) break;
        if (g.is_constant() && P.domain().kind() == DomainKind::Integer &&
            std::get<Int>(g.constant_value()) == 1)
            break;
    }
    if (g.is_zero()) return MPoly::constant(P.domain(), P.vars(), ops.one());
    return g;
}

}  // namespace

MPoly gcd_mpoly(const MPoly& A, const MPoly& B) { return gcd_impl(A, B); }

MPoly squarefree_part(const MPoly& P) {
    if (P.is_zero()) return P;
    MPoly work = P;
    if (P.domain().kind() == DomainKind::Integer) work = P.content_primitive().second;
    MPoly g = work;
    for (size_t v = 0; v < P.nvars(); ++v) {
        if (work.degree(v) <= 0) continue;
        g = gcd_mpoly(g, work.derivative(v));
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return work;
    MPoly r = work.exact_div(g);
    if (P.domain().kind() == DomainKind::Integer) r = r.content_primitive().second;
    return r;
}

MPoly resultant_sylvester(const MPoly& P, const MPoly& R, size_t var) {
    int dP = P.degree(var), dR = R.degree(var);
    if (dP <= 0 || dR <= 0) throw Error("resultant: both arguments need positive degree");
    const size_t n = static_cast<size_t>(dP + dR);
    const CoefDomain& dom = P.domain();
    DomainOps ops{dom};
    MPoly zero(dom, P.vars());
    std::vector<std::vector<MPoly>> M(n, std::vector<MPoly>(n, zero));
    for (int i = 0; i < dR; ++i)
        for (int j = 0; j <= dP; ++j) M[i][i + j] = P.coeff_in(var, static_cast<uint32_t>(dP - j));
    for (int i = 0; i < dP; ++i)
        for (int j = 0; j <= dR; ++j)
            M[dR + i][i + j] = R.coeff_in(var, static_cast<uint32_t>(dR - j));
    // Bareiss fraction-free elimination over the polynomial ring.
    MPoly prev = MPoly::constant(dom, P.vars(), ops.one());
    int sign_flips = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t swp = k + 1;
            while (swp < n && M[swp][k].is_zero()) ++swp;
            if (swp == n) return zero;
            std::swap(M[k], M[swp]);
            ++sign_flips;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.exact_div(prev);
            }
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    MPoly det = M[n - 1][n - 1];
    return (sign_flips % 2) ? -det : det;
}

MPoly resultant(const MPoly& A0, const MPoly& B0, size_t var) {
    int dA = A0.degree(var), dB = B0.degree(var);
    if (dA <= 0 || dB <= 0) throw Error("resultant: both arguments need positive degree in var");
    const CoefDomain& dom = A0.domain();
    DomainOps ops{dom};
    MPoly A = A0, B = B0;
    int s = 1;
    if (dA < dB) {
        std::swap(A, B);
        std::swap(dA, dB);
        if ((dA & 1) && (dB & 1)) s = -s;
    }
    // strip contents, compensate with t = cont(A)^degB * cont(B)^degA
    MPoly ca = content_wrt(A, var), cb = content_wrt(B, var);
    A = A.exact_div(ca);
    B = B.exact_div(cb);
    MPoly t = ca.pow(static_cast<unsigned long>(dB)) * cb.pow(static_cast<unsigned long>(dA));
    MPoly g = MPoly::constant(dom, A.vars(), ops.one());
    MPoly h = g;
    while (true) {
        dA = A.degree(var);
        dB = B.degree(var);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        MPoly R = pseudo_rem(A, B, var);
        if (R.is_zero()) return MPoly(dom, A.vars());
        A = B;
        MPoly divisor = g * h.pow(static_cast<unsigned long>(delta));
        B = R.exact_div(divisor);
        g = A.leading_coeff(var);
        if (delta > 0) {
            h = g.pow(static_cast<unsigned long>(delta))
                    .exact_div(h.pow(static_cast<unsigned long>(delta - 1)));
        }
        if (B.degree(var) == 0) {
            int d = A.degree(var);
            MPoly res = B.pow(static_cast<unsigned long>(d))
                            .exact_div(h.pow(static_cast<unsigned long>(d - 1)));
            res = res * t;
            return s < 0 ? -res : res;
        }
    }
}

MPoly resultant(const MPoly& P, const MPoly& R, const std::string& var) {
    return resultant(P, R, P.var_index(var));
}

std::optional<MPoly> poly_sqrt(const MPoly& P, int* failure_degree,
                               const std::function<std::optional<Coef>(const Coef&)>& coef_sqrt) {
    if (failure_degree) *failure_degree = -1;
    if (P.is_zero()) return P;
    const CoefDomain& dom = P.domain();
    DomainOps ops{dom};
    // locate the single variable
    size_t var = SIZE_MAX;
    for (size_t v = 0; v < P.nvars(); ++v) {
        if (P.degree(v) > 0) {
            if (var != SIZE_MAX) throw Error("poly_sqrt: univariate input required");
            var = v;
        }
    }
    if (var == SIZE_MAX) {
        // constant
        Coef c = P.constant_value();
        std::optional<Coef> s;
        if (coef_sqrt)
            s = coef_sqrt(c);
        else if (dom.kind() == DomainKind::Rational)
            if (auto r = exact_sqrt(std::get<Rat>(c))) s = Coef(*r);
        if (dom.kind() == DomainKind::Integer)
            if (auto r = exact_sqrt(std::get<Int>(c))) s = Coef(*r);
        if (dom.kind() == DomainKind::PrimeField || dom.kind() == DomainKind::ModPrimePower)
            if (auto r = sqrt_mod_prime_power(std::get<Int>(c), dom.prime(), dom.precision()))
                s = Coef(*r);
        if (!s) return std::nullopt;
        return MPoly::constant(dom, P.vars(), *s);
    }
    int n = P.degree(var);
    if (n % 2) return std::nullopt;
    int m = n / 2;
    std::vector<Coef> a(static_cast<size_t>(n) + 1, ops.zero());
    for (size_t t = 0; t < P.nterms(); ++t) a[P.exps(t)[var]] = P.coef(t);

    auto default_sqrt = [&](const Coef& c) -> std::optional<Coef> {
        switch (dom.kind()) {
            case DomainKind::Rational:
                if (auto r = exact_sqrt(std::get<Rat>(c))) return Coef(*r);
                return std::nullopt;
            case DomainKind::Integer:
                if (auto r = exact_sqrt(std::get<Int>(c))) return Coef(*r);
                return std::nullopt;
            case DomainKind::PrimeField:
            case DomainKind::ModPrimePower:
                if (auto r = sqrt_mod_prime_power(std::get<Int>(c), dom.prime(), dom.precision()))
                    return Coef(*r);
                return std::nullopt;
            case DomainKind::NumberFieldK: {
                const NFElem& e = std::get<NFElem>(c);
                if (e.is_rational())
                    if (auto r = exact_sqrt(e.rational_part()))
                        return Coef(NFElem::from_rational(e.field(), *r));
                return std::nullopt;
            }
        }
        return std::nullopt;
    };
    auto lead = coef_sqrt ? coef_sqrt(a[static_cast<size_t>(n)])
                          : default_sqrt(a[static_cast<size_t>(n)]);
    if (!lead) {
        if (failure_degree) *failure_degree = n;
        return std::nullopt;
    }
    std::vector<Coef> y(static_cast<size_t>(m) + 1, ops.zero());
    y[static_cast<size_t>(m)] = *lead;
    Coef twolead = ops.mul(ops.from_int(2), *lead);
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of t^(m+k) in y^2 minus the 2*y_m*y_k part
        Coef acc = ops.zero();
        for (int i = k + 1; i < m; ++i) {
            int j = m + k - i;
            if (j > k && j < m && j >= 0 && i < j) {
                Coef pr = ops.mul(y[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
                acc = ops.add(acc, ops.add(pr, pr));
            } else if (j == i) {
                acc = ops.add(acc, ops.mul(y[static_cast<size_t>(i)], y[static_cast<size_t>(i)]));
            }
        }
        Coef rhs = ops.sub(a[static_cast<size_t>(m + k)], acc);
        y[static_cast<size_t>(k)] = ops.div(rhs, twolead);
    }
    // verify low half
    std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
    for (int k = 0; k <= m; ++k) {
        std::vector<uint32_t> e(P.nvars(), 0);
        e[var] = static_cast<uint32_t>(k);
        terms.emplace_back(std::move(e), y[static_cast<size_t>(k)]);
    }
    MPoly Y = MPoly::from_terms(dom, P.vars(), std::move(terms));
    MPoly diff = Y * Y - P;
    if (!diff.is_zero()) {
        if (failure_degree) *failure_degree = diff.degree(var);
        return std::nullopt;
    }
    // sign normalization for ordered fields: leading coefficient positive
    if (dom.kind() == DomainKind::Rational || dom.kind() == DomainKind::Integer) {
        bool neg = dom.kind() == DomainKind::Rational
                       ? std::get<Rat>(Y.coef(0)) < 0
                       : std::get<Int>(Y.coef(0)) < 0;
        if (neg) Y = -Y;
    } else if (dom.is_modular()) {
        // deterministic branch: smallest residue representative of the lead
        const Int& lc = std::get<Int>(Y.coef(0));
        if (2 * lc > dom.modulus()) Y = -Y;
    }
    return Y;
}

namespace {

// Newton lift of a simple root of f mod p to mod p^k.
Int lift_root(const std::vector<Int>& f, const Int& p, unsigned k, const Int& r0) {
    auto evalf = [&](const Int& x, const Int& m) {
        Int acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_reduce(acc * x + *it, m);
        return acc;
    };
    std::vector<Int> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Int(static_cast<long>(i)));
    auto evald = [&](const Int& x, const Int& m) {
        Int acc = 0;
        for (auto it = df.rbegin(); it != df.rend(); ++it) acc = mod_reduce(acc * x + *it, m);
        return acc;
    };
    Int r = r0;
    unsigned cur = 1;
    while (cur < k) {
        cur = std::min(2 * cur, k);
        Int m = pow_int(p, cur);
        Int fr = evalf(r, m);
        Int dr = evald(r, m);
        auto inv = invmod(dr, m);
        if (!inv) throw Error("lift_root: derivative not invertible");
        r = mod_reduce(r - fr * *inv, m);
    }
    return r;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const MPoly& P0) {
    if (P0.is_zero()) throw Error("rational_roots: zero polynomial");
    MPoly P = P0;
    if (P.domain().kind() == DomainKind::Rational) P = P.to_integer_cleared().second;
    if (P.domain().kind() != DomainKind::Integer)
        throw DomainMismatch("rational_roots: rational/integer domain required");
    size_t var = SIZE_MAX;
    for (size_t v = 0; v < P.nvars(); ++v) {
        if (P.degree(v) > 0) {
            if (var != SIZE_MAX) throw Error("rational_roots: univariate input required");
            var = v;
        }
    }
    std::vector<std::pair<Rat, unsigned>> out;
    if (var == SIZE_MAX) return out;

    // dense coefficients
    int n = P.degree(var);
    std::vector<Int> a(static_cast<size_t>(n) + 1, Int(0));
    for (size_t t = 0; t < P.nterms(); ++t) a[P.exps(t)[var]] = std::get<Int>(P.coef(t));
    // factor out t^v
    unsigned vz = 0;
    while (a[vz] == 0) ++vz;
    if (vz) {
        out.emplace_back(Rat(0), vz);
        a.erase(a.begin(), a.begin() + vz);
        n -= static_cast<int>(vz);
    }
    if (n == 0) return out;

    // squarefree part via gcd with derivative (univariate, dense)
    MPoly Pz = MPoly::from_terms(P.domain(), P.vars(), [&] {
        std::vector<std::pair<std::vector<uint32_t>, Coef>> ts;
        for (int i = 0; i <= n; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            std::vector<uint32_t> e(P.nvars(), 0);
            e[var] = static_cast<uint32_t>(i);
            ts.emplace_back(std::move(e), Coef(a[static_cast<size_t>(i)]));
        }
        return ts;
    }());
    MPoly S = squarefree_part(Pz);
    int dS = S.degree(var);
    std::vector<Int> sc(static_cast<size_t>(dS) + 1, Int(0));
    for (size_t t = 0; t < S.nterms(); ++t) sc[S.exps(t)[var]] = std::get<Int>(S.coef(t));

    // root bound (Cauchy): |root| <= 1 + max|a_i| / |lc|, denominators divide lc
    Int maxc = 0;
    for (const auto& c : sc) maxc = std::max(maxc, Int(abs(c)));
    Int lc = abs(sc.back());
    Int num_bound = lc + maxc;       // |p| <= den * (1 + max/lc) <= lc + maxc
    Int den_bound = lc;
    Int need = 2 * std::max(num_bound, den_bound) * std::max(num_bound, den_bound) + 1;

    // pick a prime where S stays squarefree with full degree
    static const long kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10079, 10091};
    for (long pl : kPrimes) {
        Int p(pl);
        if (lc % p == 0) continue;
        // roots of S mod p by scan
        std::vector<Int> roots_p;
        bool repeated = false;
        std::vector<Int> scp;
        for (const auto& c : sc) scp.push_back(mod_reduce(c, p));
        std::vector<Int> dscp;
        for (size_t i = 1; i < scp.size(); ++i) dscp.push_back(mod_reduce(scp[i] * Int(static_cast<long>(i)), p));
        for (long x = 0; x < pl; ++x) {
            Int acc = 0;
            for (auto it = scp.rbegin(); it != scp.rend(); ++it) acc = mod_reduce(acc * x + *it, p);
            if (acc == 0) {
                Int d = 0;
                for (auto it = dscp.rbegin(); it != dscp.rend(); ++it) d = mod_reduce(d * x + *it, p);
                if (d == 0) {
                    repeated = true;
                    break;
                }
                roots_p.emplace_back(x);
            }
        }
        if (repeated) continue;
        unsigned k = 1;
        Int mod = p;
        while (mod < need) {
            mod = mod * mod;
            k *= 2;
        }
        for (const Int& r : roots_p) {
            Int lifted = lift_root(sc, p, k, r);
            auto rec = rational_reconstruct(lifted, pow_int(p, k));
            if (!rec) continue;
            // exact verification against the squarefree part
            Rat cand = *rec;
            Int nu(cand.get_num()), de(cand.get_den());
            Int acc = 0;
            for (int i = dS; i >= 0; --i)
                acc = acc * nu + sc[static_cast<size_t>(i)] * pow_int(de, static_cast<unsigned long>(dS - i));
            if (acc != 0) continue;
            // multiplicity against the full polynomial
            unsigned mult = 0;
            std::vector<Int> cur = a;
            while (true) {
                // synthetic division by (de*t - nu)
                std::vector<Int> q(cur.size() - 1, Int(0));
                Int rem = 0;
                for (int i = static_cast<int>(cur.size()) - 1; i >= 1; --i) {
                    Int top = cur[static_cast<size_t>(i)] + rem;
                    // cur = (de*t - nu)*q + r: iterate top-down
                    q[static_cast<size_t>(i - 1)] = top / de;
                    if (top % de != 0) { rem = 0; q.clear(); break; }
                    rem = q[static_cast<size_t>(i - 1)] * nu;
                }
                if (q.empty()) break;
                if (cur[0] + rem != 0) break;
                ++mult;
                cur = q;
                if (cur.size() <= 1) break;
            }
            if (mult) out.emplace_back(cand, mult);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }
    throw Error("rational_roots: no suitable prime found");
}

MPoly embed_nf_mod(const MPoly& P, const Int& p, unsigned k, const Int& root) {
    if (P.domain().kind() != DomainKind::NumberFieldK)
        throw DomainMismatch("embed_nf_mod: number-field domain required");
    CoefDomain md = CoefDomain::mod_prime_power(p, k);
    DomainOps mops{md};
    const Int m = md.modulus();
    std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
    for (size_t t = 0; t < P.nterms(); ++t) {
        const NFElem& e = std::get<NFElem>(P.coef(t));
        Int acc = 0;
        Int tp = 1;
        for (const Rat& c : e.coords()) {
            auto inv = invmod(Int(c.get_den()), m);
            if (!inv) throw Error("embed_nf_mod: denominator not invertible mod p");
            acc = mod_reduce(acc + Int(c.get_num()) * *inv % m * tp, m);
            tp = mod_reduce(tp * root, m);
        }
        terms.emplace_back(std::vector<uint32_t>(P.exps(t).begin(), P.exps(t).end()), Coef(acc));
    }
    return MPoly::from_terms(md, P.vars(), std::move(terms));
}

}  // namespace pellforge
