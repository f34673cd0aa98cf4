#include "flagcodes/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagcodes {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit integers
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
    std::vector<u64> fs;
    factor_rec(n, fs);
    std::sort(fs.begin(), fs.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : fs) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<u64> prime_factors_u64(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factorize_u64(n)) out.push_back(p);
    return out;
}

std::vector<u64> divisors_u64(u64 n) {
    std::vector<u64> out{1};
    for (auto& [p, e] : factorize_u64(n)) {
        size_t m = out.size();
        u64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < m; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<u64, int>> prime_power_decompose(u64 n) {
    if (n < 2) return std::nullopt;
    auto fs = factorize_u64(n);
    if (fs.size() != 1) return std::nullopt;
    return std::make_pair(fs[0].first, fs[0].second);
}

u64 checked_pow_u64(u64 base, int exp) {
    u64 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > ~u64(0) / base) throw std::overflow_error("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace flagcodes
