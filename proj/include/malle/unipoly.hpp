/* Dense univariate polynomials with exact rational coefficients.  This is
   the home of the discriminant/resultant arithmetic, squarefree parts and
   exact root finding used everywhere else.  No floating point: real roots
   are isolated by sign-change bisection with rational endpoints, so integer
   roots of monic polynomials with enormous constant terms are found without
   divisor enumeration. */

#pragma once

#include <vector>

#include "malle/intmath.hpp"
#include "malle/modpoly.hpp"

namespace malle {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& c);
  static UniPoly from_int_coeffs(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lc() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_integral() const;
  bool is_monic() const { return !is_zero() && lc() == 1; }

  Rat eval(const Rat& t) const;
  Int eval_int(const Int& t) const;  // requires integral coefficients

  UniPoly derivative() const;
  // Max |coefficient|; 0 for the zero polynomial.
  Rat height() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly scaled(const Rat& c) const;

  // Content/primitive form: returns the primitive integer polynomial with
  // positive leading coefficient equal to this up to a rational unit.
  UniPoly primitive_integer() const;

  // Reduction mod p; requires denominators coprime to p.
  ModPoly reduce_mod(uint64_t p) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Euclidean division over Q: a = q*b + r, deg r < deg b.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd over Q

// Sylvester resultant via the polynomial remainder sequence.
Rat resultant(const UniPoly& a, const UniPoly& b);

// Standard discriminant (-1)^(n(n-1)/2) res(f, f') / lc(f).
Rat discriminant(const UniPoly& f);

// rad(f) = f / gcd(f, f'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& f);

// All rational roots, ascending, multiplicity-free.  Exact; goes through
// the monic transform z = lc * T plus integer root isolation.
std::vector<Rat> rational_roots(const UniPoly& f);

// All integer roots of a monic integral polynomial, ascending.  Real roots
// are isolated by recursive sign-change bisection with exact rational
// endpoints and only the nearest integers are tested.
std::vector<Int> integer_roots_monic(const UniPoly& f);

}  // namespace malle
