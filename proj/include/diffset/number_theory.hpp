#pragma once

#include <cstdint>

namespace diffset {

/// Deterministic primality test (Miller-Rabin with a base set exact for 64-bit).
bool is_prime(std::int64_t n);

std::int64_t mod_reduce(std::int64_t a, std::int64_t p);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p);
/// Inverse modulo a prime p; throws std::domain_error when p divides a.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion
/// a^((p-1)/2) mod p. Throws std::invalid_argument if p is not an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

}  // namespace diffset
