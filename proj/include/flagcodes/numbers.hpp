#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace flagcodes {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

bool is_prime_u64(u64 n);

/// Prime factorization with multiplicity, sorted ascending.
std::vector<std::pair<u64, int>> factorize_u64(u64 n);

/// Distinct prime factors, sorted ascending.
std::vector<u64> prime_factors_u64(u64 n);

/// All positive divisors, sorted ascending.
std::vector<u64> divisors_u64(u64 n);

/// Writes n = p^e with p prime, or nullopt if n is not a prime power (or n < 2).
std::optional<std::pair<u64, int>> prime_power_decompose(u64 n);

/// p^e, throwing std::overflow_error if the result does not fit in 64 bits.
u64 checked_pow_u64(u64 base, int exp);

template <typename Int>
Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

template <typename Int>
Int lcm_of(const std::vector<Int>& v) {
    Int l = 1;
    for (Int x : v) l = std::lcm(l, x);
    return l;
}

}  // namespace flagcodes
