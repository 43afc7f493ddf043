#include "diffset/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace diffset {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  auto un = static_cast<std::uint64_t>(n);
  std::uint64_t d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  if (exp < 0) throw std::invalid_argument("negative exponent");
  return static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(mod_reduce(base, p)),
                                           static_cast<std::uint64_t>(exp),
                                           static_cast<std::uint64_t>(p)));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = mod_reduce(a, p);
  if (r == 0) throw std::domain_error("not invertible modulo " + std::to_string(p));
  return mod_pow(r, p - 2, p);
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  std::int64_t e = mod_pow(a, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

}  // namespace diffset
