#pragma once

#include <optional>
#include <vector>

#include "legdet/errors.hpp"
#include "legdet/numbers.hpp"

namespace legdet {

/// Deterministic primality by trial division.  Exact for every input; meant
/// for desk-scale operands (<= 10^6 or so), not cryptographic sizes.
bool is_prime(const Int& x);

enum class ResidueMode {
  require_1_mod_4,  // strict: p must be prime and 1 (mod 4)
  any_odd,          // relaxed: any odd prime; the quarter index is omitted
};

/// Validated working prime p = 2n+1 with derived quantities.
struct PrimeCtx {
  Int p;                   // odd prime
  long n = 0;              // (p-1)/2; even when p = 1 (mod 4)
  std::optional<long> m;   // (p-1)/4, present only in strict mode
  int L = 0;               // Legendre symbol (2|p), in {-1,+1}
};

/// Throws NotPrimeError / WrongResidueError on invalid input.
PrimeCtx prime_ctx(const Int& p, ResidueMode mode = ResidueMode::require_1_mod_4);

/// Legendre symbol (a|p) in {-1,0,+1}, by quadratic-reciprocity reduction.
/// Validates that p is an odd prime; the PrimeCtx overload skips the check.
int legendre(const Int& a, const Int& p);
int legendre(const Int& a, const PrimeCtx& ctx);

/// Primes p = 1 (mod 4) in [lo, hi].
std::vector<long> primes_1mod4(long lo, long hi);

/// All odd primes in [lo, hi].
std::vector<long> odd_primes(long lo, long hi);

}  // namespace legdet
