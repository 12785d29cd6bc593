/* Integral-point machinery: the brute-force counter Z (integers t0 in [1,B]
   whose fiber F(t0,Y) has an integer root), the Liouville root bound, the
   Case 1/2 exponent-improvement selection with the T^E + Y substitution,
   and the central-bound evaluator.  H+, L1, L2 and every bound run on
   >= 128-bit mantissas with directed rounding; the brute counters are pure
   integer arithmetic. */

#pragma once

#include <optional>
#include <vector>

#include "malle/bigfloat.hpp"
#include "malle/bipoly.hpp"

namespace malle {

struct WalkowiakInstance {
  BiPoly F;   // monic in Y, integer coefficients, deg_Y >= 2
  long m = 0; // deg_T
  long n = 0; // deg_Y
  long D = 0; // total degree
  Int H;      // height (overridable for experiments)

  // Built at kPrec with the stated rounding for the derived reals.
  BigFloat Hplus_up, L1_up, L2_down;  // directed so L1/L2 ratios round up

  static WalkowiakInstance make(const BiPoly& F, std::optional<Int> H_override = {});
};

struct BruteZResult {
  Int count;
  // Found (t0, y) pairs, capped; enough for the consistency tests.
  std::vector<std::pair<Int, Int>> samples;
};

// Exact count of t0 in [1, B] such that F(t0, Y) has an integer root; the
// per-fiber test is exact (perfect-power fast path for fibers Y^n + c,
// rational-endpoint root isolation otherwise).  Asserts the Liouville bound
// on every root found.
BruteZResult brute_Z(const WalkowiakInstance& inst, const Int& B,
                     size_t sample_cap = 100000);

// ceil(2 (m+1) H+ B^m), rounded up throughout.
Int liouville_bound(const WalkowiakInstance& inst, const Int& B);

struct CaseSelect {
  int case_no = 1;  // 1 or 2
  long E = 0;       // set iff case 2
};

// Case 1 iff m n L1/L2 <= D, else case 2 with E = floor(m n L1/L2) + 1.
// Decided by interval evaluation, widening precision until resolved.
CaseSelect case_select(const WalkowiakInstance& inst);

// 2^36 D^5 log^3(1250 D^11 B^(5D-1)) log^2(B) B^(1/D); the paper's symbol d
// is read as the total degree D.  Rounded up.  Requires D >= 1, B >= 2.
BigFloat central_bound(long D, const Int& B);

// Lattice-point counter N(F, B): all (t, y) with max(|t|,|y|) <= B on F = 0.
Int brute_lattice_count(const WalkowiakInstance& inst, const Int& B);

struct ScalingResult {
  double theta = 0;  // least-squares slope of log Z vs log B
  bool pass = false; // theta <= 1/n + 0.1
  std::vector<std::pair<Int, Int>> counts;  // (B, Z)
};

// Grid must be >= 3 strictly increasing values spanning >= 2 decades.
ScalingResult scaling_experiment(const WalkowiakInstance& inst,
                                 const std::vector<Int>& grid);

// Exact integer roots of the fiber F(t0, Y).
std::vector<Int> fiber_integer_roots(const WalkowiakInstance& inst, const Int& t0);

}  // namespace malle
