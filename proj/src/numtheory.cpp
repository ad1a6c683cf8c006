#include "e8kit/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace e8kit::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (auto a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1U;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> result;
  for (auto p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

std::vector<std::uint64_t> prime_support(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime_support: zero");
  std::vector<std::uint64_t> primes;
  const auto mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  for (const auto& [p, e] : factor(mag)) primes.push_back(p);
  return primes;
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero has no square class");
  const auto mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::uint64_t part = 1;
  for (const auto& [p, e] : factor(mag)) {
    if (e % 2 == 1) part *= p;
  }
  if (part > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw OverflowError("squarefree_part: result exceeds int64");
  const auto signed_part = static_cast<std::int64_t>(part);
  return n < 0 ? -signed_part : signed_part;
}

std::int64_t squarefree_part(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero has no square class");
  mpz_class mag = abs(n);
  // Strip small primes first so that moderately large inputs fall into range.
  mpz_class part = 1;
  for (unsigned long p = 2; p < 2000; ++p) {
    if (!is_prime(p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(mag.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(mag.get_mpz_t(), mag.get_mpz_t(), p);
      ++e;
    }
    if (e % 2 == 1) part *= p;
  }
  if (!mag.fits_ulong_p())
    throw OverflowError("squarefree_part: cofactor exceeds 64 bits");
  const std::uint64_t rest = mag.get_ui();
  for (const auto& [p, e] : factor(rest)) {
    if (e % 2 == 1) part *= p;
  }
  if (!part.fits_slong_p()) throw OverflowError("squarefree_part: result exceeds int64");
  const std::int64_t value = part.get_si();
  return sgn(n) < 0 ? -value : value;
}

std::int64_t squarefree_part(const mpq_class& q) {
  return squarefree_mul(squarefree_part(q.get_num()), squarefree_part(q.get_den()));
}

std::int64_t squarefree_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("squarefree_mul: zero");
  const std::int64_t g = std::gcd(a, b);
  std::int64_t result = 0;
  if (__builtin_mul_overflow(a / g, b / g, &result))
    throw OverflowError("squarefree_mul: product exceeds int64");
  return result;
}

int valuation(std::int64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: zero");
  auto mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  int v = 0;
  while (mag % p == 0) {
    mag /= p;
    ++v;
  }
  return v;
}

int legendre(std::int64_t a, std::uint64_t p) {
  auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(p));
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  const auto t = powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return t == 1 ? 1 : -1;
}

bool is_local_square(std::int64_t d, std::uint64_t p) {
  const int v = valuation(d, p);
  if (v % 2 != 0) return false;
  std::int64_t unit = d;
  for (int i = 0; i < v; ++i) unit /= static_cast<std::int64_t>(p);
  if (p == 2) {
    auto r = unit % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  return legendre(unit, p) == 1;
}

}  // namespace e8kit::nt
