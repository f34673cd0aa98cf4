#pragma once

#include <vector>

#include "flagcodes/numbers.hpp"

namespace flagcodes::gfpoly {

// Polynomials over F_p are packed into a u64 as sum c_i * p^i with digits
// c_i in [0, p). For p = 2 this is the usual bit mask. All routines assume
// the packed value fits, which holds whenever p^(deg+1) <= 2^63.

std::vector<int> unpack(u64 a, u64 p, int count);
u64 pack(const std::vector<int>& c, u64 p);

int degree(u64 a, u64 p);

u64 add(u64 a, u64 b, u64 p);
u64 sub(u64 a, u64 b, u64 p);

/// a * b mod f, with f monic.
u64 mulmod(u64 a, u64 b, u64 f, u64 p);
u64 powmod(u64 a, u64 e, u64 f, u64 p);

u64 gcd(u64 a, u64 b, u64 p);

bool is_irreducible(u64 f, u64 p);

/// f irreducible and its root a generator of the multiplicative group.
bool is_primitive(u64 f, u64 p);
bool is_primitive(u64 f, u64 p, const std::vector<u64>& order_prime_factors);

/// Lexicographically smallest primitive polynomial of the given degree over
/// F_p, comparing coefficient tuples (c_0, c_1, ...) from the constant term.
u64 default_modulus(u64 p, int deg);

}  // namespace flagcodes::gfpoly
