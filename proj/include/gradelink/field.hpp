#ifndef GRADELINK_FIELD_HPP
#define GRADELINK_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gradelink {

/* Errors carry a short machine code plus a human message; the CLI maps
 * input-shaped codes to exit 2 and budget/cap codes to exit 3. */
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

/* Deterministic Miller-Rabin, exact for p < 2^31 (bases 2,3,5,7). */
bool is_prime_u32(uint32_t p);

/* Arithmetic in Q backed by GMP rationals, always canonicalized. */
struct RationalField {
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (is_zero(a)) throw Error("division-by-zero", "inverse of zero in Q");
        return 1 / a;
    }
    static Elem div(const Elem& a, const Elem& b) { return a * inv(b); }
    static Elem from_int(long v) { return Elem(v); }
    // accepts "a" or "a/b" with arbitrary-precision integers
    static Elem parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("bad-coefficient", "cannot parse rational: " + s);
        q.canonicalize();
        return q;
    }
    static std::string str(const Elem& a) { return a.get_str(); }
    static const char* name() { return "Q"; }
};

/* F_p for a word-size prime, runtime modulus. */
struct PrimeField {
    using Elem = uint32_t;
    uint32_t p;

    explicit PrimeField(uint32_t modulus = 2) : p(modulus) {
        if (p < 2 || !is_prime_u32(p))
            throw Error("not-prime", "field modulus is not prime: " + std::to_string(p));
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(uint64_t(a) + p - b); }
    Elem mul(Elem a, Elem b) const { return Elem((uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("division-by-zero", "inverse of zero in F_p");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += p;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem from_int(long v) const {
        long m = v % long(p);
        if (m < 0) m += p;
        return Elem(m);
    }
    Elem parse(const std::string& s) const {
        // integers or a/b reduced mod p
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            mpz_class z;
            if (z.set_str(s, 10) != 0) throw Error("bad-coefficient", "cannot parse coefficient: " + s);
            mpz_class m = z % p;
            if (m < 0) m += p;
            return Elem(m.get_ui());
        }
        Elem num = parse(s.substr(0, slash));
        Elem den = parse(s.substr(slash + 1));
        return div(num, den);
    }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace gradelink

#endif
