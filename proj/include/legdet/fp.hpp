#pragma once

#include "legdet/errors.hpp"
#include "legdet/numbers.hpp"

namespace legdet {

/// Element of the prime field Z/p.  Each element carries its modulus;
/// mixing moduli is a programming error.
class Fp {
 public:
  Fp(Int value, Int modulus) : v_(mod_floor(value, modulus)), p_(std::move(modulus)) {}

  /// Lift of a Legendre symbol in {-1,0,+1}.
  static Fp from_symbol(int sym, const Int& modulus) { return Fp(Int(sym), modulus); }

  const Int& value() const { return v_; }
  const Int& modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp operator-() const { return Fp(-v_, p_); }
  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ + b.v_, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v_ * b.v_, a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp inverse() const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), p_.get_mpz_t()) == 0)
      throw Error("Fp: inverse of zero (mod " + p_.get_str() + ")");
    return Fp(r, p_);
  }

  Fp pow(const Int& e) const {
    if (sgn(e) < 0) return inverse().pow(-e);
    Int r;
    mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
    return Fp(r, p_);
  }

 private:
  void check(const Fp& other) const {
    if (p_ != other.p_) throw InternalError("Fp: mixed moduli");
  }
  Int v_, p_;
};

inline Fp zero_like(const Fp& x) { return Fp(Int(0), x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(Int(1), x.modulus()); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

}  // namespace legdet
