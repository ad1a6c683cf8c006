#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace e8kit::nt {

/// Raised when an exact integer result does not fit the 64-bit working range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

bool is_prime(std::uint64_t n);

/// Prime factorization (trial division, then Pollard rho), ascending primes.
std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n);

/// Distinct primes dividing |n|, ascending. n = 0 is rejected.
std::vector<std::uint64_t> prime_support(std::int64_t n);

/// Square-free representative of the square class of n; the sign is kept.
std::int64_t squarefree_part(std::int64_t n);
std::int64_t squarefree_part(const mpz_class& n);
std::int64_t squarefree_part(const mpq_class& q);

/// Square-free part of a*b for square-free a, b, without factoring.
std::int64_t squarefree_mul(std::int64_t a, std::int64_t b);

/// p-adic valuation of n != 0.
int valuation(std::int64_t n, std::uint64_t p);

/// Legendre symbol (a/p) for an odd prime p; 0 when p | a.
int legendre(std::int64_t a, std::uint64_t p);

/// True when the square-free integer d is a square in Q_p (p prime).
bool is_local_square(std::int64_t d, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace e8kit::nt
