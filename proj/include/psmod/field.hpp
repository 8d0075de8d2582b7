#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "psmod/errors.hpp"

namespace psmod {

// Fields are small value-type context objects; matrices and subspaces carry a
// copy of their field and delegate all scalar arithmetic to it.  Two fields of
// the same type compare equal iff they describe the same arithmetic (always
// true for Q, same modulus for F_p).

// Arbitrary-precision rationals, always canonicalized (lowest terms, positive
// denominator).
struct RationalField {
  using Elem = mpq_class;
  static constexpr bool ordered = true;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  // Sign of the element: -1, 0, or 1.  Only ordered fields provide this.
  int sign(const Elem& a) const { return sgn(a); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  // Accepts "a", "-a", and "a/b" forms.
  Elem parse(const std::string& s) const {
    try {
      Elem v(s);
      v.canonicalize();
      return v;
    } catch (const std::invalid_argument&) {
      throw MalformedInput("cannot parse rational '" + s + "'");
    }
  }

  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

// Integers modulo a prime p, residues stored in [0, p).  p is assumed to fit
// in 63 bits; intermediates use 128-bit arithmetic so products never overflow.
struct PrimeField {
  using Elem = std::uint64_t;
  static constexpr bool ordered = false;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (p < 2) throw MalformedInput("field modulus must be at least 2");
    if (!is_prime(p)) throw MalformedInput("field modulus " + std::to_string(p) + " is not prime");
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long v) const {
    long long r = static_cast<long long>(v % static_cast<long long>(p));
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero");
    // Extended Euclid on (a, p); p prime guarantees a unit.
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  int sign(Elem) const { throw Error("prime fields are not ordered"); }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    if (s.find('/') != std::string::npos)
      throw MalformedInput("fractional entry '" + s + "' is not valid over F_p");
    try {
      return from_long(std::stol(s));
    } catch (const std::exception&) {
      throw MalformedInput("cannot parse residue '" + s + "'");
    }
  }

  std::string name() const { return "F" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace psmod
