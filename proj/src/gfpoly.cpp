#include "flagcodes/gfpoly.hpp"

#include <stdexcept>

namespace flagcodes::gfpoly {

std::vector<int> unpack(u64 a, u64 p, int count) {
    std::vector<int> c(count, 0);
    for (int i = 0; i < count && a; ++i) {
        c[i] = static_cast<int>(a % p);
        a /= p;
    }
    return c;
}

u64 pack(const std::vector<int>& c, u64 p) {
    u64 a = 0;
    for (size_t i = c.size(); i-- > 0;) a = a * p + static_cast<u64>(c[i]);
    return a;
}

int degree(u64 a, u64 p) {
    if (a == 0) return -1;
    if (p == 2) return 63 - __builtin_clzll(a);
    int d = -1;
    for (int i = 0; a; ++i, a /= p)
        if (a % p) d = i;
    return d;
}

u64 add(u64 a, u64 b, u64 p) {
    if (p == 2) return a ^ b;
    u64 r = 0, mul = 1;
    while (a || b) {
        r += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

u64 sub(u64 a, u64 b, u64 p) {
    if (p == 2) return a ^ b;
    u64 r = 0, mul = 1;
    while (a || b) {
        r += (a % p + p - b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

namespace {

u64 mulmod_gf2(u64 a, u64 b, u64 f) {
    int df = degree(f, 2);
    u128 acc = 0;
    for (int i = 0; b; ++i, b >>= 1)
        if (b & 1) acc ^= u128(a) << i;
    for (int i = 2 * df; i >= df; --i)
        if ((acc >> i) & 1) acc ^= u128(f) << (i - df);
    return static_cast<u64>(acc);
}

int inv_mod_p(int a, u64 p) { return static_cast<int>(powmod_u64(static_cast<u64>(a), p - 2, p)); }

}  // namespace

u64 mulmod(u64 a, u64 b, u64 f, u64 p) {
    if (p == 2) return mulmod_gf2(a, b, f);
    int df = degree(f, p);
    std::vector<int> fa = unpack(a, p, df), fb = unpack(b, p, df), fc = unpack(f, p, df + 1);
    std::vector<int> prod(2 * df, 0);
    for (int i = 0; i < df; ++i) {
        if (!fa[i]) continue;
        for (int j = 0; j < df; ++j) prod[i + j] = static_cast<int>((prod[i + j] + u64(fa[i]) * fb[j]) % p);
    }
    for (int k = 2 * df - 1; k >= df; --k) {
        int c = prod[k];
        if (!c) continue;
        for (int i = 0; i <= df; ++i)
            prod[k - df + i] = static_cast<int>((prod[k - df + i] + u64(p - c) * fc[i]) % p);
    }
    prod.resize(df);
    return pack(prod, p);
}

u64 powmod(u64 a, u64 e, u64 f, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, f, p);
        a = mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

namespace {

// remainder of a by nonzero b
u64 poly_mod(u64 a, u64 b, u64 p) {
    int db = degree(b, p);
    if (db < 0) throw std::invalid_argument("polynomial division by zero");
    std::vector<int> ra = unpack(a, p, 64);
    std::vector<int> rb = unpack(b, p, db + 1);
    int lc_inv = inv_mod_p(rb[db], p);
    for (int k = degree(a, p); k >= db; --k) {
        int c = ra[k];
        if (!c) continue;
        int m = static_cast<int>(u64(c) * lc_inv % p);
        for (int i = 0; i <= db; ++i)
            ra[k - db + i] = static_cast<int>((ra[k - db + i] + u64(p - 1) * m % p * rb[i]) % p);
    }
    ra.resize(db);
    return pack(ra, p);
}

}  // namespace

u64 gcd(u64 a, u64 b, u64 p) {
    while (b) {
        u64 r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(u64 f, u64 p) {
    int d = degree(f, p);
    if (d < 1) return false;
    if (f % p == 0) return d == 1;  // divisible by x
    // Rabin's test: x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for primes l | d
    u64 x = p;  // the polynomial "x"
    auto frobenius_iterate = [&](int k) {
        u64 t = x;
        for (int i = 0; i < k; ++i) t = powmod(t, p, f, p);
        return t;
    };
    for (u64 l : prime_factors_u64(static_cast<u64>(d))) {
        u64 t = frobenius_iterate(d / static_cast<int>(l));
        if (degree(gcd(sub(t, x, p), f, p), p) != 0) return false;  // nonzero constants are units
    }
    return frobenius_iterate(d) == x;
}

bool is_primitive(u64 f, u64 p, const std::vector<u64>& order_prime_factors) {
    if (!is_irreducible(f, p)) return false;
    int d = degree(f, p);
    u64 group_order = checked_pow_u64(p, d) - 1;
    u64 x = p;
    for (u64 l : order_prime_factors)
        if (powmod(x, group_order / l, f, p) == 1) return false;
    return true;
}

bool is_primitive(u64 f, u64 p) {
    int d = degree(f, p);
    if (d < 1) return false;
    return is_primitive(f, p, prime_factors_u64(checked_pow_u64(p, d) - 1));
}

u64 default_modulus(u64 p, int deg) {
    auto factors = prime_factors_u64(checked_pow_u64(p, deg) - 1);
    u64 count = checked_pow_u64(p, deg);
    u64 top = checked_pow_u64(p, deg);  // monic leading term x^deg
    // candidates with c_0 = 0 are divisible by x; lex order visits them first
    u64 first = deg >= 1 ? checked_pow_u64(p, deg - 1) : 0;
    for (u64 v = first; v < count; ++v) {
        // v encodes (c_0, ..., c_{deg-1}) with c_0 as the most significant
        // base-p digit, so ascending v is ascending lexicographic order.
        u64 rem = v, rep = 0;
        for (int i = deg - 1; i >= 0; --i) {
            rep += rem % p * checked_pow_u64(p, i);
            rem /= p;
        }
        if (rep % p == 0) continue;  // zero constant term
        u64 f = top + rep;
        if (is_primitive(f, p, factors)) return f;
    }
    throw std::runtime_error("no primitive polynomial found");  // unreachable for valid p, deg
}

}  // namespace flagcodes::gfpoly
