/* Dense bivariate integer polynomials P(T,Y): entry (i,j) multiplies
   T^i * Y^j.  The paper's models are low degree, so the dense layout wins
   on simplicity.  Resultants in Y are computed by evaluation/interpolation
   over exact rationals, discriminants with the standard sign. */

#pragma once

#include <string>
#include <vector>

#include "malle/unipoly.hpp"

namespace malle {

class BiPoly {
 public:
  BiPoly() = default;
  // rows[i][j] multiplies T^i Y^j; trailing zero rows/columns are trimmed.
  explicit BiPoly(std::vector<std::vector<Int>> rows);

  // Parse "Y^2 - T^2 + T"-free simple builder: term list (coef, i, j).
  static BiPoly from_terms(const std::vector<std::tuple<long, int, int>>& terms);

  bool is_zero() const { return rows_.empty(); }
  int deg_T() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_Y() const { return degY_; }
  int total_degree() const;
  Int coeff(int i, int j) const;

  Int content() const;  // gcd of all coefficients, 0 for zero polynomial
  Int height() const;   // max |coefficient|
  bool is_monic_in_y() const;

  // Column j as a polynomial in T (the coefficient of Y^j).
  UniPoly coeff_of_y(int j) const;
  // Leading Y-coefficient as a polynomial in T.
  UniPoly leading_y_coeff() const { return coeff_of_y(degY_); }

  // P(t0, Y) as a univariate polynomial in Y.
  UniPoly eval_T(const Rat& t0) const;
  // P(T, y0) as a univariate polynomial in T.
  UniPoly eval_Y(const Rat& y0) const;
  Int eval(const Int& t0, const Int& y0) const;

  // Swap the roles of T and Y.
  BiPoly transpose() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b);

  std::string to_string() const;  // human-readable, for reports

 private:
  void trim();
  std::vector<std::vector<Int>> rows_;  // rows_[i][j] ~ T^i Y^j
  int degY_ = -1;
};

// res_Y(A, B) as a polynomial in T, by evaluation/interpolation.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);
// res_T(A, B) as a polynomial in Y.
UniPoly resultant_t(const BiPoly& a, const BiPoly& b);

// Delta_P(T): the discriminant of P relative to Y, exact, with the standard
// sign (-1)^(n(n-1)/2) res_Y(P, dP/dY) / lc_Y(P).  Throws on zero input or
// deg_Y < 1.
UniPoly discriminant_y(const BiPoly& p);

// G(T,Y) = F(T, T^E + Y), exact binomial expansion.  E >= 1.
BiPoly substitute_shift(const BiPoly& f, long e);

}  // namespace malle
