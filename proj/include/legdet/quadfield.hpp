#pragma once

#include <string>

#include "legdet/arith.hpp"
#include "legdet/numbers.hpp"

namespace legdet {

/// u + v*sqrt(p) with exact rational coordinates on the half-integer
/// lattice (2u and 2v are integers for ring-of-integers units).
struct QuadElem {
  Rat u, v;
  Int p;

  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  QuadElem pow(unsigned long e) const;
  Rat norm() const;  // u^2 - p v^2

  /// Exact sign of u + v*sqrt(p) under the real embedding sqrt(p) > 0.
  int sign() const;
  bool greater_than_one() const;

  std::string str() const;  // e.g. "(3 + 1*sqrt(13))/2"
};

/// Quadratic-field invariant package for Q(sqrt(p)), p prime, p = 1 (mod 4):
/// fundamental unit, class number, and the coordinates of eps^((2-L)h).
struct UnitData {
  QuadElem eps;  // fundamental unit, > 1
  Int h;         // class number
  Rat A, B;      // eps^((2-L)h) = A + B*sqrt(p)
  Rat Q, P;      // Q = B - A,  P = p*B - A
  int L;         // (2|p)
};

/// Smallest unit > 1 of the ring of integers of Q(sqrt(p)); equivalently
/// (u+v*sqrt(p))/2 for the minimal positive solution of u^2 - p v^2 = +-4.
/// Dispatches to the brute search at desk scale and to the continued
/// fraction expansion above it; the two agree everywhere (tested).
QuadElem fundamental_unit(const Int& p);
QuadElem fundamental_unit_search(const Int& p);  // minimal-v brute search
QuadElem fundamental_unit_cf(const Int& p);      // continued fraction of sqrt(p)

/// Class number of Q(sqrt(p)) by counting cycles of reduced indefinite
/// binary quadratic forms of discriminant p.
Int class_number(const Int& p);

/// Assembles the full invariant package.  Fails loudly if the fundamental
/// unit does not have norm -1 (it must, for prime p = 1 mod 4).
UnitData unit_invariants(const Int& p);

}  // namespace legdet
