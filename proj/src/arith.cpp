#include "legdet/arith.hpp"

namespace legdet {

bool is_prime(const Int& x) {
  if (x < 2) return false;
  if (x == 2) return true;
  if (mpz_even_p(x.get_mpz_t())) return false;
  for (Int d = 3; d * d <= x; d += 2) {
    if (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

PrimeCtx prime_ctx(const Int& p, ResidueMode mode) {
  if (!is_prime(p) || p == 2) throw NotPrimeError(p.get_str() + " is not an odd prime");
  PrimeCtx ctx;
  ctx.p = p;
  Int n = (p - 1) / 2;
  if (!n.fits_slong_p()) throw ValidationError("prime too large for desk-scale contexts");
  ctx.n = n.get_si();
  Int r = mod_floor(p, 4);
  if (r == 1) {
    ctx.m = static_cast<long>((ctx.n) / 2);
  } else if (mode == ResidueMode::require_1_mod_4) {
    throw WrongResidueError(p.get_str() + " is not 1 (mod 4)");
  }
  // (2|p) = (-1)^((p^2-1)/8), read off p mod 8.
  Int p8 = mod_floor(p, 8);
  ctx.L = (p8 == 1 || p8 == 7) ? 1 : -1;
  return ctx;
}

namespace {

// Jacobi symbol for odd n > 0; equals the Legendre symbol when n is prime.
int jacobi(Int a, Int n) {
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      Int n8 = mod_floor(n, 8);
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (mod_floor(a, 4) == 3 && mod_floor(n, 4) == 3) result = -result;
    a = mod_floor(a, n);
  }
  return n == 1 ? result : 0;
}

}  // namespace

int legendre(const Int& a, const Int& p) {
  if (!is_prime(p) || p == 2) throw NotPrimeError(p.get_str() + " is not an odd prime");
  return jacobi(a, p);
}

int legendre(const Int& a, const PrimeCtx& ctx) { return jacobi(a, ctx.p); }

std::vector<long> primes_1mod4(long lo, long hi) {
  std::vector<long> out;
  for (long x = std::max(lo, 5L); x <= hi; ++x) {
    if (x % 4 == 1 && is_prime(Int(x))) out.push_back(x);
  }
  return out;
}

std::vector<long> odd_primes(long lo, long hi) {
  std::vector<long> out;
  for (long x = std::max(lo, 3L); x <= hi; ++x) {
    if (x % 2 == 1 && is_prime(Int(x))) out.push_back(x);
  }
  return out;
}

}  // namespace legdet
