#include "legdet/quadfield.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "legdet/errors.hpp"

namespace legdet {

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  if (a.p != b.p) throw InternalError("QuadElem: mixed fields");
  QuadElem r;
  r.p = a.p;
  r.u = a.u * b.u + Rat(a.p) * a.v * b.v;
  r.v = a.u * b.v + a.v * b.u;
  return r;
}

QuadElem QuadElem::pow(unsigned long e) const {
  QuadElem acc{Rat(1), Rat(0), p};
  QuadElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Rat QuadElem::norm() const { return u * u - Rat(p) * v * v; }

int QuadElem::sign() const {
  int su = sgn(u), sv = sgn(v);
  if (su >= 0 && sv >= 0) return (su == 0 && sv == 0) ? 0 : 1;
  if (su <= 0 && sv <= 0) return -1;
  // Opposite signs: compare u^2 against p v^2.
  Rat diff = u * u - Rat(p) * v * v;  // = (u+v sqrt p)(u-v sqrt p)
  if (su > 0) return sgn(diff);       // u > 0 > v: u - v sqrt p > 0
  return -sgn(diff);                  // v > 0 > u: u - v sqrt p < 0
}

bool QuadElem::greater_than_one() const {
  QuadElem shifted{u - 1, v, p};
  return shifted.sign() > 0;
}

std::string QuadElem::str() const {
  Rat u2 = u * 2, v2 = v * 2;
  if (u2.get_den() == 1 && v2.get_den() == 1 && (mpz_odd_p(u2.get_num().get_mpz_t()) ||
                                                 mpz_odd_p(v2.get_num().get_mpz_t()))) {
    return "(" + to_decimal(Int(u2.get_num())) + " + " + to_decimal(Int(v2.get_num())) +
           "*sqrt(" + p.get_str() + "))/2";
  }
  return to_decimal(u) + " + " + to_decimal(v) + "*sqrt(" + p.get_str() + ")";
}

namespace {

void require_1mod4_prime(const Int& p) {
  prime_ctx(p);  // throws NotPrimeError / WrongResidueError
}

QuadElem half_unit(const Int& u2, const Int& v2, const Int& p) {
  return QuadElem{make_rat(u2, Int(2)), make_rat(v2, Int(2)), p};
}

}  // namespace

QuadElem fundamental_unit_search(const Int& p) {
  require_1mod4_prime(p);
  // Scan v = 1, 2, ... for u^2 = p v^2 -+ 4.  Coordinates of unit powers
  // grow strictly with the exponent, so the first hit is fundamental; for a
  // given v the -4 solution has the smaller u and is preferred.
  for (Int v = 1;; ++v) {
    Int pv2 = p * v * v;
    for (int delta : {-4, +4}) {
      Int u2 = pv2 + delta;
      if (u2 > 0 && is_perfect_square(u2)) return half_unit(isqrt(u2), v, p);
    }
    if (v > 2000000) throw InternalError("fundamental_unit_search: no solution found");
  }
}

QuadElem fundamental_unit_cf(const Int& p) {
  require_1mod4_prime(p);
  // Continued fraction of sqrt(p): the convergent at the end of the period
  // gives the minimal solution of x^2 - p y^2 = (-1)^period.  For prime
  // p = 1 (mod 4) the period is odd, so the norm is -1.
  const Int a0 = isqrt(p);
  Int P = 0, Q = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  Int x0, y0;
  for (std::size_t step = 1;; ++step) {
    P = a * Q - P;
    Q = (p - P * P) / Q;
    if (Q == 1) {
      // Period closes at `step`; the previous convergent (h, k) solves
      // x^2 - p y^2 = (-1)^step, and the period is odd for p = 1 (mod 4).
      if (step % 2 == 0)
        throw InternalError("fundamental_unit_cf: even period for p = 1 mod 4");
      x0 = h;
      y0 = k;
      break;
    }
    a = (a0 + P) / Q;
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (step > 1000000) throw InternalError("fundamental_unit_cf: period not found");
  }
  if (x0 * x0 - p * y0 * y0 != -1)
    throw InternalError("fundamental_unit_cf: expected a norm -1 solution for p = 1 mod 4");

  // x0 + y0 sqrt(p) generates the units of Z[sqrt(p)]; the maximal order can
  // be three times finer.  A half-integer cube root (u+v sqrt p)/2 satisfies
  // v (p v^2 - 3) = 2 y0, so solve that cubic for an odd integer v.
  Int target = 2 * y0;
  Int approx;
  mpz_root(approx.get_mpz_t(), Int(target / p).get_mpz_t(), 3);
  for (Int v = std::max(Int(approx - 2), Int(1)); v <= approx + 2; ++v) {
    if (mpz_even_p(v.get_mpz_t())) continue;
    if (v * (p * v * v - 3) != target) continue;
    Int u2 = p * v * v - 4;
    if (u2 <= 0 || !is_perfect_square(u2)) continue;
    Int u = isqrt(u2);
    if (mpz_even_p(u.get_mpz_t())) continue;
    QuadElem eps = half_unit(u, v, p);
    QuadElem cube = eps.pow(3);
    if (cube.u == Rat(x0) && cube.v == Rat(y0)) return eps;
  }
  return half_unit(2 * x0, 2 * y0, p);
}

QuadElem fundamental_unit(const Int& p) {
  // The brute search is self-evidently correct and fast while solutions are
  // small; the continued fraction takes over where they grow.
  if (p < 150) return fundamental_unit_search(p);
  return fundamental_unit_cf(p);
}

namespace {

struct Form {
  long a, b, c;
  auto key() const { return std::tuple(a, b, c); }
};

// Unique r = -b (mod 2|c|) inside the reduction window.
long rho_r(long b, long c, long s, const Int& /*D*/) {
  long ac = c < 0 ? -c : c;
  long two_c = 2 * ac;
  long lo = (ac > s) ? (-ac + 1) : (s - two_c + 1);
  long target = ((-b) % two_c + two_c) % two_c;
  long r = lo + ((target - lo) % two_c + two_c) % two_c;
  return r;
}

Form rho(const Form& f, long s, const Int& D) {
  long r = rho_r(f.b, f.c, s, D);
  Int c_next = (Int(r) * r - D) / (4 * Int(f.c));
  return Form{f.c, r, static_cast<long>(c_next.get_si())};
}

bool is_reduced(const Form& f, const Int& D) {
  // |sqrt(D) - 2|a|| < b < sqrt(D), in integer arithmetic.
  if (f.b <= 0) return false;
  Int b2 = Int(f.b) * f.b;
  if (b2 >= D) return false;
  long aa = f.a < 0 ? -f.a : f.a;
  Int upper = Int(2 * aa + f.b);
  if (D >= upper * upper) return false;
  long t = 2 * aa - f.b;
  if (t > 0 && Int(t) * t >= D) return false;
  return true;
}

}  // namespace

Int class_number(const Int& p) {
  require_1mod4_prime(p);
  const Int D = p;
  const long s = static_cast<long>(isqrt(D).get_si());

  // All reduced forms (a,b,c), b^2 - 4ac = D: odd 0 < b < sqrt(D), and
  // |a| |c| = (D - b^2)/4 with a, c of opposite signs.
  std::map<std::tuple<long, long, long>, std::size_t> index;
  std::vector<Form> forms;
  for (long b = 1; b <= s; b += 2) {
    Int N = (D - Int(b) * b) / 4;
    for (long a = 1; Int(a) * a <= N; ++a) {
      if (!mpz_divisible_ui_p(N.get_mpz_t(), static_cast<unsigned long>(a))) continue;
      long c = static_cast<long>(Int(N / a).get_si());
      for (auto [aa, cc] : {std::pair(a, -c), std::pair(c, -a)}) {
        Form f1{aa, b, cc}, f2{-aa, b, -cc};
        for (const Form& f : {f1, f2}) {
          if (is_reduced(f, D) && !index.count(f.key())) {
            index.emplace(f.key(), forms.size());
            forms.push_back(f);
          }
        }
      }
    }
  }
  if (forms.empty()) throw InternalError("class_number: no reduced forms found");

  std::vector<bool> visited(forms.size(), false);
  Int cycles = 0;
  for (std::size_t start = 0; start < forms.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    std::size_t cur = start;
    do {
      visited[cur] = true;
      Form next = rho(forms[cur], s, D);
      auto it = index.find(next.key());
      if (it == index.end())
        throw InternalError("class_number: rho left the set of reduced forms");
      cur = it->second;
    } while (!visited[cur]);
  }
  return cycles;
}

UnitData unit_invariants(const Int& p) {
  PrimeCtx ctx = prime_ctx(p);
  UnitData ud;
  ud.L = ctx.L;
  ud.eps = fundamental_unit(p);
  if (!ud.eps.greater_than_one())
    throw InternalError("unit_invariants: fundamental unit not > 1");
  if (ud.eps.norm() != -1)
    throw InternalError(
        "unit_invariants: fundamental unit has norm +1; narrow and wide class "
        "numbers would differ (impossible for prime p = 1 mod 4)");
  ud.h = class_number(p);
  unsigned long e = static_cast<unsigned long>(Int((2 - ctx.L) * ud.h).get_ui());
  QuadElem pw = ud.eps.pow(e);
  ud.A = pw.u;
  ud.B = pw.v;
  ud.Q = ud.B - ud.A;
  ud.P = Rat(p) * ud.B - ud.A;

  // Half-integer lattice and unit-power norm, checked exactly.
  Rat a2 = ud.A * 2, b2 = ud.B * 2;
  if (a2.get_den() != 1 || b2.get_den() != 1)
    throw InternalError("unit_invariants: 2A, 2B are not integers");
  Rat want = (e % 2 == 0) ? Rat(1) : Rat(-1);
  if (pw.norm() != want)
    throw InternalError("unit_invariants: A^2 - p B^2 != (-1)^((2-L)h)");
  if (ud.Q == 0) throw InternalError("unit_invariants: B - A vanishes");
  return ud;
}

}  // namespace legdet
