/* Exhaustive verification of the twisting equivalence on its concrete
   quadratic instance: twisting y^2 = f(t) by Q(sqrt(d)) gives d y^2 = f(t),
   whose rational (resp. mod-p) points detect exactly the specializations
   isomorphic to Q(sqrt(d)) (resp. matching the local Frobenius condition).
   Each check runs two independent routes and insists they agree. */

#pragma once

#include <vector>

#include "malle/unipoly.hpp"

namespace malle {

struct QuadTwist {
  UniPoly f;  // integral, squarefree, nonconstant
  Int d;      // squarefree, nonzero

  static QuadTwist make(const UniPoly& f, const Int& d);  // validates
};

// Global equivalence at t0 (f(t0) != 0): [kernel(f(t0)) == d] versus
// [exists rational y with d y^2 = f(t0)].  Throws std::logic_error if the
// two routes disagree; returns the common value.
bool verify_global(const QuadTwist& twist, const Int& t0);

// Local equivalence at an odd good prime: for every residue t0 with
// f(t0) != 0 mod p, [chi_p(f(t0)) == chi_p(d)] iff [exists y in F_p with
// d y^2 = f(t0)].  Returns true iff every residue passes.
bool verify_local(const QuadTwist& twist, long p);

struct LangWeilTwistReport {
  long p = 0;
  long genus = 0;
  long affine_points = 0;
  long points_at_infinity = 0;
  long total = 0;
  bool within_bounds = false;  // |N - (p+1)| <= 2g sqrt(p), decided exactly
};

// Count F_p points of the smooth model of d y^2 = f(t) and check the
// Lang-Weil window.  Points at infinity: 1 if deg f odd; else 2 when
// d * lc(f) is a square mod p, 0 otherwise.
LangWeilTwistReport lang_weil_on_twist(const QuadTwist& twist, long p);

// Residues t0 mod p where d y^2 = f(t0) has a solution with f(t0) != 0.
std::vector<long> split_residues(const QuadTwist& twist, long p);

bool twist_prime_ok(const QuadTwist& twist, long p);  // precondition test

}  // namespace malle
