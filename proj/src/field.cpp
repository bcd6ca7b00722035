#include "gradelink/field.hpp"

namespace gradelink {

static uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return (unsigned __int128)(a)*b % m;
}

static uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

/* Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below
 * 3,215,031,751 which covers the full 32-bit range we accept. */
bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = powmod64(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, p);
            if (x == p - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace gradelink
