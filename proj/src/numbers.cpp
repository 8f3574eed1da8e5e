#include "pellforge/numbers.hpp"

namespace pellforge {

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod_reduce(a0, p);
    if (a == 0) return Int(0);
    if (p == 2) return a;  // 0,1 are their own roots
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        Int r = powmod(a, (p + 1) / 4, p);
        return std::min(r, Int(p - r));
    }
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (powmod(z, (p - 1) / 2, p) == 1) ++z;
    Int m(static_cast<long>(s));
    Int c = powmod(z, q, p);
    Int t = powmod(a, q, p);
    Int r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = mod_reduce(tt * tt, p);
            ++i;
            if (i == m) return std::nullopt;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mod_reduce(b * b, p);
        m = i;
        c = mod_reduce(b * b, p);
        t = mod_reduce(t * c, p);
        r = mod_reduce(r * b, p);
    }
    return std::min(r, Int(p - r));
}

std::optional<Int> sqrt_mod_prime_power(const Int& a0, const Int& p, unsigned k) {
    if (p == 2) throw Error("sqrt_mod_prime_power: p = 2 unsupported");
    Int m = pow_int(p, k);
    Int a = mod_reduce(a0, m);
    if (a == 0) return Int(0);
    if (a % p == 0) {
        // extract even power of p
        unsigned v = valuation(a, p);
        if (v % 2) return std::nullopt;
        Int rest = a / pow_int(p, v);
        if (v >= k) return Int(0);
        auto r = sqrt_mod_prime_power(rest, p, k - v);
        if (!r) return std::nullopt;
        return mod_reduce(*r * pow_int(p, v / 2), m);
    }
    auto r0 = sqrt_mod_prime(a, p);
    if (!r0) return std::nullopt;
    Int r = *r0;
    unsigned cur = 1;
    while (cur < k) {
        cur = std::min(2 * cur, k);
        Int mm = pow_int(p, cur);
        Int f = mod_reduce(r * r - a, mm);
        Int inv = *invmod(mod_reduce(2 * r, mm), mm);
        r = mod_reduce(r - f * inv, mm);
    }
    r = mod_reduce(r, m);
    return std::min(r, Int(m - r));
}

std::optional<Rat> rational_reconstruct(const Int& a0, const Int& m) {
    Int a = mod_reduce(a0, m);
    Int bound = isqrt(m / 2);
    // half-extended Euclid on (m, a)
    Int r0 = m, r1 = a;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    Int n = r1, d = t1;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d == 0 || d > bound) return std::nullopt;
    if (gcd_int(n, d) != 1) return std::nullopt;
    if (gcd_int(d, m) != 1) return std::nullopt;
    if (mod_reduce(n - a * d, m) != 0) return std::nullopt;
    Rat out(n, d);
    out.canonicalize();
    return out;
}

}  // namespace pellforge
