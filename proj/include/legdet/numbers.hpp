#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace legdet {

// Every math path runs on arbitrary-precision integers/rationals; the
// determinant intermediates outgrow 64 bits long before the interesting
// primes do.
using Int = mpz_class;
using Rat = mpq_class;

/// Exact decimal rendering: "-27" for integers, "3/2" otherwise.
std::string to_decimal(const Rat& x);
std::string to_decimal(const Int& x);

/// num/den as a canonical rational (den != 0).
Rat make_rat(const Int& num, const Int& den);

bool is_perfect_square(const Int& x);
Int isqrt(const Int& x);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

/// floor division remainder in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

/// Deterministic substream derivation: a base seed plus a (prime, tag) pair
/// always yields the same stream, independent of scheduling.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t prime, std::string_view tag);

// Field hooks used by the generic linear algebra (see matrix.hpp).  Each
// field type supplies its own overloads; these cover the rationals.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

}  // namespace legdet
