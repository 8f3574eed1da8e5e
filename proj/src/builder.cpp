#include "pellforge/builder.hpp"

#include <algorithm>
#include <sstream>

namespace pellforge {

std::string Signature::to_string() const {
    std::ostringstream os;
    os << a << "," << b << "," << q << "," << x << "," << y;
    return os.str();
}

Signature Signature::parse(const std::string& csv) {
    Signature s;
    unsigned vals[5];
    size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
        size_t comma = csv.find(',', pos);
        std::string part =
            comma == std::string::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
        if (part.empty()) throw ParseError("signature: expected a,b,q,x,y");
        vals[i] = static_cast<unsigned>(std::stoul(part));
        if (comma == std::string::npos && i < 4) throw ParseError("signature: expected 5 entries");
        pos = comma + 1;
    }
    s.a = vals[0];
    s.b = vals[1];
    s.q = vals[2];
    s.x = vals[3];
    s.y = vals[4];
    return s;
}

MPoly EpzFamily::residual() const { return X.pow(3) + A * X + B - Q * Y * Y; }

EpzTemplate make_template(const Signature& sig) {
    if (!sig.degree_matched())
        throw Error("make_template: inconsistent signature (3x != q + 2y)");
    if (sig.q != 2) throw Error("make_template: only quadratic Q templates are supported");
    if (sig.x < 2 || sig.y < 2) throw Error("make_template: degenerate signature");
    std::vector<std::string> names{"t"};
    std::vector<std::string> unknowns;
    auto add = [&](const std::string& stem, unsigned count) {
        for (unsigned i = 0; i < count; ++i) {
            names.push_back(stem + std::to_string(i));
            unknowns.push_back(names.back());
        }
    };
    add("x", sig.x - 1);
    add("y", sig.y - 1);
    add("q", sig.q);
    add("a", sig.a + 1);
    add("b", sig.b + 1);
    EpzTemplate tpl;
    tpl.sig = sig;
    tpl.vars = make_vars(names);
    tpl.unknowns = unknowns;
    auto dom = CoefDomain::integers();
    auto var = [&](const std::string& n) { return MPoly::variable(dom, tpl.vars, n); };
    auto tpow = [&](unsigned e) {
        return MPoly::variable(dom, tpl.vars, "t").pow(e);
    };
    // X = t^x + t^(x-1) + sum x_k t^k (k <= x-2)
    tpl.X = tpow(sig.x) + tpow(sig.x - 1);
    for (unsigned k = 0; k + 1 < sig.x; ++k)
        tpl.X = tpl.X + var("x" + std::to_string(k)) * tpow(k);
    // Y = t^y + 0*t^(y-1) + sum y_k t^k (k <= y-2)
    tpl.Y = tpow(sig.y);
    for (unsigned k = 0; k + 1 < sig.y; ++k)
        tpl.Y = tpl.Y + var("y" + std::to_string(k)) * tpow(k);
    tpl.Q = tpow(sig.q);
    for (unsigned k = 0; k < sig.q; ++k)
        tpl.Q = tpl.Q + var("q" + std::to_string(k)) * tpow(k);
    tpl.A = MPoly(dom, tpl.vars);
    for (unsigned k = 0; k <= sig.a; ++k)
        tpl.A = tpl.A + var("a" + std::to_string(k)) * tpow(k);
    tpl.B = MPoly(dom, tpl.vars);
    for (unsigned k = 0; k <= sig.b; ++k)
        tpl.B = tpl.B + var("b" + std::to_string(k)) * tpow(k);
    return tpl;
}

PolySystem equate_coefficients(const EpzTemplate& tpl) {
    MPoly F = tpl.X.pow(3) + tpl.A * tpl.X + tpl.B - tpl.Q * tpl.Y * tpl.Y;
    const unsigned total = 3 * tpl.sig.x;
    size_t tidx = F.var_index("t");
    if (!F.coeff_in(tidx, total).is_zero())
        throw Error("equate_coefficients: t^(3x) coefficient did not cancel");
    if (F.degree(tidx) > static_cast<int>(total))
        throw Error("equate_coefficients: degree overflow");
    PolySystem sys;
    sys.vars = make_vars(tpl.unknowns);
    for (unsigned k = 0; k < total; ++k) {
        MPoly e = F.coeff_in(tidx, k).with_vars(sys.vars);
        sys.eqs.push_back(e.content_primitive().second);
    }
    return sys;
}

std::vector<std::string> PolySystem::active_vars() const {
    std::vector<std::string> out;
    for (size_t v = 0; v < vars->size(); ++v) {
        bool used = false;
        for (const auto& e : eqs)
            if (e.degree(v) > 0) {
                used = true;
                break;
            }
        if (used) out.push_back((*vars)[v]);
    }
    return out;
}

bool PolySystem::is_active(const std::string& v) const {
    auto av = active_vars();
    return std::find(av.begin(), av.end(), v) != av.end();
}

std::vector<SignatureFamilyRow> signature_families(unsigned m) {
    auto rho_of = [](const Signature& s) -> std::optional<Rat> {
        Rat den = std::max(Rat(s.a, 2), Rat(s.b, 3));
        if (den <= 0) return std::nullopt;
        Rat r = Rat(s.x) / den;
        r.canonicalize();
        return r;
    };
    std::vector<SignatureFamilyRow> rows;
    rows.push_back({{2 * m, 3 * m, 2, 10 * m + 2, 15 * m + 2}, {}});
    rows.push_back({{2 * m, 3 * m + 1, 2, 10 * m + 4, 15 * m + 5}, {}});
    rows.push_back({{2 * m + 1, 3 * m + 1, 2, 10 * m + 6, 15 * m + 8}, {}});
    rows.push_back({{2 * m + 1, 3 * m + 2, 2, 10 * m + 8, 15 * m + 11}, {}});
    for (auto& r : rows) {
        if (!r.sig.degree_matched() || r.sig.a + r.sig.b + r.sig.q + r.sig.x + r.sig.y != 3 * r.sig.x)
            throw Error("signature_families: internal row inconsistency");
        r.rho = rho_of(r.sig);
    }
    return rows;
}

MoebiusMultipliers MoebiusMultipliers::from_rats(const CoefDomain& dom, const Rat& sX,
                                                 const Rat& sY, const Rat& sQ, const Rat& sA,
                                                 const Rat& sB) {
    DomainOps ops{dom};
    return {ops.from_rat(sX), ops.from_rat(sY), ops.from_rat(sQ), ops.from_rat(sA),
            ops.from_rat(sB)};
}

namespace {

void check_multipliers(const DomainOps& ops, const MoebiusMultipliers& m) {
    Coef sx3 = ops.mul(ops.mul(m.sX, m.sX), m.sX);
    if (!ops.eq(sx3, ops.mul(m.sA, m.sX)) || !ops.eq(sx3, m.sB) ||
        !ops.eq(sx3, ops.mul(m.sQ, ops.mul(m.sY, m.sY))))
        throw Error("apply_moebius: multipliers violate s_X^3 = s_A s_X = s_B = s_Q s_Y^2");
}

Signature actual_signature(const EpzFamily& f) {
    auto d = [&](const MPoly& p) {
        int deg = p.is_zero() ? 0 : p.degree(static_cast<size_t>(0));
        return static_cast<unsigned>(std::max(deg, 0));
    };
    return {d(f.A), d(f.B), d(f.Q), d(f.X), d(f.Y)};
}

}  // namespace

EpzFamily apply_moebius(const EpzFamily& fam, const Coef& alpha, const Coef& beta,
                        const MoebiusMultipliers& mult) {
    DomainOps ops{fam.X.domain()};
    check_multipliers(ops, mult);
    if (ops.is_zero(alpha)) throw Error("apply_moebius: alpha must be nonzero");
    const auto& vars = fam.X.vars();
    MPoly t = MPoly::variable(fam.X.domain(), vars, "t");
    MPoly lin = t.mul_coef(alpha) + MPoly::constant(fam.X.domain(), vars, beta);
    EpzFamily out;
    out.X = fam.X.substitute("t", lin).mul_coef(mult.sX);
    out.Y = fam.Y.substitute("t", lin).mul_coef(mult.sY);
    out.Q = fam.Q.substitute("t", lin).mul_coef(mult.sQ);
    out.A = fam.A.substitute("t", lin).mul_coef(mult.sA);
    out.B = fam.B.substitute("t", lin).mul_coef(mult.sB);
    out.sig = actual_signature(out);
    if (!out.residual().is_zero()) throw Error("apply_moebius: identity lost");
    return out;
}

EpzFamily apply_moebius_inversion(const EpzFamily& fam, const MoebiusMultipliers& mult) {
    DomainOps ops{fam.X.domain()};
    check_multipliers(ops, mult);
    size_t tv = fam.X.var_index("t");
    auto reverse_into = [&](const MPoly& p, unsigned degree_bound) {
        // t^degree_bound * p(1/t)
        std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
        for (size_t i = 0; i < p.nterms(); ++i) {
            auto e = p.exps(i);
            if (e[tv] > degree_bound) throw Error("apply_moebius_inversion: degree overflow");
            std::vector<uint32_t> ne(e.begin(), e.end());
            ne[tv] = degree_bound - e[tv];
            terms.emplace_back(std::move(ne), p.coef(i));
        }
        return MPoly::from_terms(p.domain(), p.vars(), std::move(terms));
    };
    EpzFamily out;
    out.X = reverse_into(fam.X, fam.sig.x).mul_coef(mult.sX);
    out.Y = reverse_into(fam.Y, fam.sig.y).mul_coef(mult.sY);
    out.Q = reverse_into(fam.Q, 2).mul_coef(mult.sQ);
    out.A = reverse_into(fam.A, 2 * fam.sig.x).mul_coef(mult.sA);
    out.B = reverse_into(fam.B, 3 * fam.sig.x).mul_coef(mult.sB);
    out.sig = actual_signature(out);
    if (!out.residual().is_zero()) throw Error("apply_moebius_inversion: identity lost");
    return out;
}

EpzFamily normalize_family(const EpzFamily& fam) {
    const CoefDomain& dom = fam.X.domain();
    if (!dom.is_field()) throw Error("normalize_family: field coefficients required");
    DomainOps ops{dom};
    const unsigned x = fam.sig.x, y = fam.sig.y;
    size_t tv = fam.X.var_index("t");
    Coef lX = fam.X.coeff_in(tv, x).constant_value();
    Coef lY = fam.Y.coeff_in(tv, y).constant_value();
    Coef lQ = fam.Q.coeff_in(tv, 2).constant_value();
    if (ops.is_zero(lX) || ops.is_zero(lY) || ops.is_zero(lQ))
        throw Error("normalize_family: leading coefficient vanishes");
    // translation killing Y's t^(y-1), from Y(t + nu)
    Coef cy1 = fam.Y.coeff_in(tv, y - 1).constant_value();
    Coef nu = ops.neg(ops.div(cy1, ops.mul(ops.from_int(Int(y)), lY)));
    // scale pinning X's t^(x-1) coefficient to 1 after translation
    Coef cx1 = fam.X.coeff_in(tv, x - 1).constant_value();
    Coef mu = ops.add(ops.mul(ops.from_int(Int(x)), nu), ops.div(cx1, lX));
    if (ops.is_zero(mu))
        throw Error("normalize_family: pinned coefficient vanishes (alternative case)");
    Coef s = ops.inv(ops.mul(lX, ops.pow(mu, x)));
    Coef sY = ops.inv(ops.mul(lY, ops.pow(mu, y)));
    Coef sQ = ops.inv(ops.mul(lQ, ops.pow(mu, 2)));
    MoebiusMultipliers mult{s, sY, sQ, ops.mul(s, s), ops.mul(ops.mul(s, s), s)};
    return apply_moebius(fam, mu, nu, mult);
}

std::pair<MPoly, std::vector<MPoly>> series_sqrt_tail(const MPoly& X, const MPoly& Q,
                                                      const std::string& tvar) {
    const CoefDomain& dom = X.domain();
    DomainOps ops{dom};
    size_t tv = X.var_index(tvar);
    int dx = X.degree(tv), dq = Q.degree(tv);
    if ((3 * dx - dq) % 2) throw Error("series_sqrt_tail: odd-degree configuration");
    if (!ops.is_one(X.coeff_in(tv, static_cast<uint32_t>(dx)).constant_value()) ||
        !ops.is_one(Q.coeff_in(tv, static_cast<uint32_t>(dq)).constant_value()))
        throw Error("series_sqrt_tail: X and Q must be monic in t");
    const int m = (3 * dx - dq) / 2;
    MPoly X3 = X.pow(3);
    MPoly t = MPoly::variable(dom, X.vars(), tvar);
    MPoly Y = t.pow(static_cast<unsigned long>(m));
    Coef half = ops.inv(ops.from_int(2));
    // march down from t^(3dx - 1), introducing y_{m-1}, ..., y_0; each enters
    // linearly through the cross term with the monic leads of Y and Q
    for (int j = m - 1; j >= 0; --j) {
        MPoly D = X3 - Q * Y * Y;
        int k = m + dq + j;  // degree where y_j first appears
        MPoly yj = D.coeff_in(tv, static_cast<uint32_t>(k)).mul_coef(half);
        Y = Y + yj * t.pow(static_cast<unsigned long>(j));
    }
    MPoly D = X3 - Q * Y * Y;
    std::vector<MPoly> conds;
    for (int k = m + dq - 1; k >= m + dq - 2 && k >= 0; --k) {
        MPoly c = D.coeff_in(tv, static_cast<uint32_t>(k));
        if (!c.is_zero()) conds.push_back(c);
    }
    return {Y, conds};
}

DerivationTrace appendix_case1_derivation() {
    DerivationTrace tr;
    auto dom = CoefDomain::rationals();
    auto vars = make_vars({"t", "b1", "b2", "b3", "b4", "c"});
    auto P = [&](const std::string& s) { return MPoly::parse(dom, vars, s); };
    MPoly Q = P("t^2 - c");
    MPoly X = P("(t^2 - c)*((t + b1)^2 + 2*b2) + 2*b3*t + 2*b4");
    auto [Y, conds] = series_sqrt_tail(X, Q);
    if (conds.size() != 2) throw Error("appendix: expected two residual conditions");

    // Solve the two conditions, simultaneous linear equations in (b4, c).
    auto lin_part = [&](const MPoly& e, const std::string& v) {
        return std::pair{e.coeff_in(v, 1), e.coeff_in(v, 0)};
    };
    auto [a1, r1] = lin_part(conds[0], "b4");
    auto [a2, r2] = lin_part(conds[1], "b4");
    auto [c11, d1] = lin_part(r1, "c");
    auto [c21, d2] = lin_part(r2, "c");
    if (conds[0].degree("b4") > 1 || conds[0].degree("c") > 1 || conds[1].degree("b4") > 1 ||
        conds[1].degree("c") > 1)
        throw Error("appendix: conditions not linear in (b4, c)");
    // a1*b4 + c11*c + d1 = 0 ; a2*b4 + c21*c + d2 = 0 (Cramer)
    MPoly det = a1 * c21 - a2 * c11;
    tr.b4_formula = RatFunc(c11 * d2 - c21 * d1, det);
    tr.c_formula = RatFunc(a2 * d1 - a1 * d2, det);

    // A is the t^4 coefficient of Q Y^2 - X^3 at the solved (b4, c).
    MPoly E = X.pow(3) - Q * Y * Y;
    auto subst_b4c = [&](const MPoly& e) {
        return e.substitute("b4", tr.b4_formula).substitute("c", tr.c_formula);
    };
    tr.A_formula = -subst_b4c(E.coeff_in("t", 4));

    // t^3 and t^2 coefficients of X^3 + A X - Q Y^2.
    tr.coeff_t3 = subst_b4c(E.coeff_in("t", 3)) + tr.A_formula * subst_b4c(X.coeff_in("t", 3));
    tr.coeff_t2 = subst_b4c(E.coeff_in("t", 2)) + tr.A_formula * subst_b4c(X.coeff_in("t", 2));

    MPoly fac = P("b3 - b1*b2");
    auto has_factor = [&](const RatFunc& r) {
        try {
            r.num().exact_div(fac);
            return true;
        } catch (const InexactDivision&) {
            return false;
        }
    };
    tr.t3_has_factor = has_factor(tr.coeff_t3);
    tr.t2_has_factor = has_factor(tr.coeff_t2);

    // The cofactor of (b3 - b1 b2) in the t^3 condition is linear in b1.
    MPoly N3 = tr.coeff_t3.num().exact_div(fac);
    if (N3.degree("b1") != 1) throw Error("appendix: t^3 cofactor not linear in b1");
    tr.b1_formula = RatFunc(-N3.coeff_in("b1", 0), N3.coeff_in("b1", 1));

    // Substituting b1 into the t^2 condition leaves 3 b3^2 = 2 b2^3 as the
    // only nondegenerate constraint (the rest of the numerator is a monomial
    // in b2, b3 -- asserted below).
    RatFunc after = tr.coeff_t2.substitute("b1", tr.b1_formula);
    tr.final_constraint = P("3*b3^2 - 2*b2^3").to_integer_cleared().second;
    MPoly mono = after.num().exact_div(tr.final_constraint.to_domain(dom).with_vars(vars));
    for (size_t t = 0; t < mono.nterms(); ++t) {
        auto e = mono.exps(t);
        for (size_t v = 0; v < vars->size(); ++v)
            if (e[v] && (*vars)[v] != "b2" && (*vars)[v] != "b3")
                throw Error("appendix: unexpected residual factor after b1 substitution");
    }

    // Specialization (b2, b3) = (6, 12).
    auto atpoint = [&](const RatFunc& r, const Rat& b1v) -> Rat {
        MPoly n = r.num(), d = r.den();
        std::vector<std::pair<std::string, Rat>> assign{
            {"b1", b1v}, {"b2", Rat(6)}, {"b3", Rat(12)}};
        for (auto& [v, val] : assign) {
            MPoly c = MPoly::constant(dom, vars, Coef(val));
            n = n.substitute(v, c);
            d = d.substitute(v, c);
        }
        if (!n.is_constant() || !d.is_constant()) throw Error("appendix: specialization failed");
        return Rat(std::get<Rat>(n.constant_value()) / std::get<Rat>(d.constant_value()));
    };
    tr.b1_value = atpoint(tr.b1_formula, Rat(0));  // b1-free
    tr.c_value = atpoint(tr.c_formula, tr.b1_value);
    tr.b4_value = atpoint(tr.b4_formula, tr.b1_value);
    tr.A_value = atpoint(tr.A_formula, tr.b1_value);

    // B = Q Y^2 - X^3 - A X at the specialization; a linear polynomial in t.
    {
        auto cst = [&](const Rat& v) { return MPoly::constant(dom, vars, Coef(v)); };
        MPoly Xs = X, Ys = Y, Qs = Q;
        std::vector<std::pair<std::string, Rat>> assign{{"b1", tr.b1_value}, {"b2", Rat(6)},
                                                        {"b3", Rat(12)},     {"b4", tr.b4_value},
                                                        {"c", tr.c_value}};
        for (auto& [v, val] : assign) {
            Xs = Xs.substitute(v, cst(val));
            Ys = Ys.substitute(v, cst(val));
            Qs = Qs.substitute(v, cst(val));
        }
        MPoly B = Qs * Ys * Ys - Xs.pow(3) - Xs.mul_coef(Coef(tr.A_value));
        if (B.degree("t") > 1) throw Error("appendix: specialized B not linear");
        tr.B_specialized = B.with_vars(make_vars({"t"}));
    }

    // Degenerate branches.
    auto discriminant_zero = [&](const MPoly& A, const MPoly& B) {
        MPoly d = A.pow(3).mul_coef(Coef(Rat(4))) + B.pow(2).mul_coef(Coef(Rat(27)));
        return d.is_zero();
    };
    {
        // b3 = b1 b2: c = 0, b4 = b2^2/6, A = -b2^4/3, B = 2 b2^6/27.
        MPoly b1b2 = P("b1*b2");
        RatFunc cB = tr.c_formula.substitute("b3", b1b2);
        RatFunc b4B = tr.b4_formula.substitute("b3", b1b2);
        if (!cB.is_zero()) throw Error("appendix: branch b3=b1b2 should force c = 0");
        MPoly E4 = E.coeff_in("t", 4), E3 = E.coeff_in("t", 3), E2 = E.coeff_in("t", 2),
              E1 = E.coeff_in("t", 1), E0 = E.coeff_in("t", 0);
        auto sub_branch = [&](const MPoly& e) {
            return RatFunc::from_poly(e)
                .substitute("b4", b4B)
                .substitute("c", cB)
                .substitute("b3", RatFunc::from_poly(b1b2));
        };
        RatFunc Abr = -sub_branch(E4);
        // B = -(E + A X) restricted to degrees 1, 0
        RatFunc B1 = -(sub_branch(E1) + Abr * sub_branch(X.coeff_in("t", 1)));
        RatFunc B0 = -(sub_branch(E0) + Abr * sub_branch(X.coeff_in("t", 0)));
        // the t^3, t^2 parts vanish on this branch
        if (!(sub_branch(E3) + Abr * sub_branch(X.coeff_in("t", 3))).is_zero() ||
            !(sub_branch(E2) + Abr * sub_branch(X.coeff_in("t", 2))).is_zero())
            throw Error("appendix: branch b3=b1b2 residuals do not vanish");
        if (!B1.is_zero()) throw Error("appendix: branch b3=b1b2 B should be constant");
        DerivationTrace::Branch br;
        br.name = "b3 = b1*b2";
        br.A = Abr.num();  // denominator 1 after normalization
        if (!Abr.is_poly() || !B0.is_poly()) throw Error("appendix: branch values not polynomial");
        br.B = B0.num();
        br.discriminant_vanishes = discriminant_zero(br.A, br.B);
        br.cusp_when_all_zero = true;  // b2 = 0 collapses A and B
        tr.degenerate_branches.push_back(std::move(br));
    }
    {
        // b2 = 0 (forces b3 = 0): A = -3 b4^2, B = -2 b4^3 for any b4, c.
        auto zero = MPoly(dom, vars);
        MPoly X0 = X.substitute("b2", zero).substitute("b3", zero);
        auto [Y0, conds0] = series_sqrt_tail(X0, Q);
        if (!conds0.empty()) throw Error("appendix: b2=b3=0 should satisfy the tail conditions");
        MPoly E0all = X0.pow(3) - Q * Y0 * Y0;
        MPoly A0 = -E0all.coeff_in("t", 4);
        MPoly Bfull = -(E0all + X0 * A0);
        if (Bfull.degree("t") > 0)
            throw Error("appendix: branch b2=0 B should be t-free");
        DerivationTrace::Branch br;
        br.name = "b2 = 0 (then b3 = 0)";
        br.A = A0;
        br.B = Bfull;
        br.discriminant_vanishes = discriminant_zero(br.A, br.B);
        br.cusp_when_all_zero = true;  // b4 = 0 collapses both
        tr.degenerate_branches.push_back(std::move(br));
    }
    {
        // b3 = 0, b2 != 0: conditions force b1 = 0 and c = 0, landing on the
        // same degenerate cubic as the first branch.
        auto zero = MPoly(dom, vars);
        MPoly X0 = X.substitute("b3", zero).substitute("b1", zero);
        auto [Y0, conds0] = series_sqrt_tail(X0, Q);
        // solve the remaining conditions for b4 (linear) and then force c = 0
        MPoly cond = conds0.empty() ? MPoly(dom, vars) : conds0[0];
        if (cond.degree("b4") != 1) throw Error("appendix: b3=0 condition not linear in b4");
        RatFunc b4sol(-cond.coeff_in("b4", 0), cond.coeff_in("b4", 1));
        MPoly E3v = X0.pow(3) - Q * Y0 * Y0;
        RatFunc A3 = -RatFunc::from_poly(E3v.coeff_in("t", 4)).substitute("b4", b4sol);
        RatFunc t2cond = RatFunc::from_poly(E3v.coeff_in("t", 2)).substitute("b4", b4sol) +
                         A3 * RatFunc::from_poly(X0.coeff_in("t", 2)).substitute("b4", b4sol);
        // the t^2 coefficient forces c = 0 (it is a nonzero multiple of a
        // power of c when b2 != 0)
        if (t2cond.is_zero()) throw Error("appendix: b3=0 t^2 condition unexpectedly vanishes");
        MPoly t2num = t2cond.num();
        if (t2num.degree("c") < 1) throw Error("appendix: b3=0 t^2 condition independent of c");
        RatFunc Afin = A3.substitute("c", zero);
        RatFunc Bfin = -(RatFunc::from_poly(E3v.coeff_in("t", 0)).substitute("b4", b4sol) +
                         A3 * RatFunc::from_poly(X0.coeff_in("t", 0)).substitute("b4", b4sol));
        Bfin = Bfin.substitute("c", zero);
        if (!Afin.is_poly() || !Bfin.is_poly())
            throw Error("appendix: branch b3=0 values not polynomial");
        DerivationTrace::Branch br;
        br.name = "b3 = 0, b2 != 0 (then b1 = 0, c = 0)";
        br.A = Afin.num();
        br.B = Bfin.num();
        br.discriminant_vanishes = discriminant_zero(br.A, br.B);
        br.cusp_when_all_zero = true;
        tr.degenerate_branches.push_back(std::move(br));
    }
    return tr;
}

}  // namespace pellforge
