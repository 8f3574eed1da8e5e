#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pellforge {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for every error this library throws deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& w) : Error(w) {}
};
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& w) : Error(w) {}
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& w) : Error(w) {}
};
struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

inline Int int_from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("bad integer literal: " + s);
    return v;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw Error("pow_rat: zero to negative power");
    return pow_rat(Rat(base.get_den(), base.get_num()), -e);
}

inline Int powmod(Int base, Int e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::optional<Int> invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    return r;
}

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Symmetric representative in (-m/2, m/2].
inline Int mod_symmetric(const Int& a, const Int& m) {
    Int r = mod_reduce(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Largest square root if a is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& a) {
    if (a < 0) return std::nullopt;
    if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline std::optional<Rat> exact_sqrt(const Rat& a) {
    auto n = exact_sqrt(Int(a.get_num()));
    auto d = exact_sqrt(Int(a.get_den()));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_prime(const Int& p) { return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0; }

// p-adic valuation of a (a != 0), i.e. largest e with p^e | a.
inline unsigned valuation(const Int& a, const Int& p) {
    if (a == 0) throw Error("valuation of zero");
    Int q = a;
    unsigned v = 0;
    Int rem, quot;
    while (true) {
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) break;
        q = quot;
        ++v;
    }
    return v;
}

// Square root mod odd prime p via Tonelli-Shanks; nullopt for non-residues.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Hensel-lift a simple square root mod p to mod p^k (p odd, a a unit mod p).
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned k);

// Rational reconstruction: n/d with |n|, d <= sqrt(m/2), gcd(d, m) = 1 and
// n = a*d mod m; nullopt when no such pair exists.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

// Exact count of decimal digits of |a| (mpz_sizeinbase may overshoot by 1).
inline size_t decimal_digits(const Int& a) {
    if (a == 0) return 1;
    Int t = abs(a);
    return t.get_str().size();
}

}  // namespace pellforge
