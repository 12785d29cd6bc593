/* Univariate polynomial arithmetic over F_p (word-sized p) and complete
   factorization: squarefree decomposition, distinct-degree splitting and
   seeded Cantor-Zassenhaus equal-degree splitting.  The factorization type
   (sorted degree multiset) is the class invariant the rest of the library
   reads off; it is independent of the seed, and the factor list itself is
   returned in a canonical order so runs are reproducible. */

#pragma once

#include <cstdint>
#include <vector>

#include "malle/intmath.hpp"

namespace malle {

// Coefficients live in [0, p); index = degree; trimmed (no trailing zeros).
// The zero polynomial has an empty coefficient vector and degree -1.
class ModPoly {
 public:
  ModPoly() : p_(0) {}
  ModPoly(uint64_t p, std::vector<uint64_t> coeffs);

  static ModPoly zero(uint64_t p) { return ModPoly(p, {}); }
  static ModPoly constant(uint64_t p, uint64_t c) { return ModPoly(p, {c % p}); }
  static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }

  uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint64_t lc() const { return c_.back(); }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  uint64_t eval(uint64_t t) const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b);

  ModPoly scaled(uint64_t c) const;
  ModPoly monic() const;
  ModPoly derivative() const;

  // Ordering on (degree, coefficient tuple); canonical factor order.
  bool operator<(const ModPoly& b) const;

 private:
  void trim();
  uint64_t p_;
  std::vector<uint64_t> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly mod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(ModPoly a, ModPoly b);  // monic gcd
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

struct ModPFactorization {
  uint64_t p = 0;
  ModPoly input;
  uint64_t unit = 1;  // leading coefficient; product(factors^mult)*unit == input
  std::vector<std::pair<ModPoly, int>> factors;  // monic irreducible, canonical order

  // Sorted multiset of factor degrees, each degree repeated per multiplicity.
  std::vector<int> type() const;
};

// Complete factorization over F_p.  Deterministic given the seed; the
// factorization type does not depend on it.  Throws if p is not prime or
// f is zero.
ModPFactorization factor_mod_p(const ModPoly& f, uint64_t seed = 1);

}  // namespace malle
