/* Globalization: assemble the CRT set of integers with prescribed Frobenius
   data on S0 ∪ Sx and prescribed ramification on S, enumerate it inside
   [1, B(x)], certify conditions (i)-(iv) per specialization, and evaluate
   the coset-count upper bound report. */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "malle/frobenius.hpp"

namespace malle {

// Per-prime admissible class set; wildcard = no condition (nu = p).
struct ClassSet {
  bool wildcard = false;
  std::set<std::string> ids;
};

struct FrobeniusData {
  std::map<long, ClassSet> by_prime;

  // Density chi = prod |F_p| / |G| over the constrained primes.
  Rat chi(const CoverModel& model) const;
  void validate(const CoverModel& model) const;
};

struct SievePlan {
  CoverModel model;
  double x = 0;
  std::vector<long> S;  // ramification primes, ascending
  std::optional<Int> t1;
  std::vector<std::pair<long, std::string>> S0;  // ascending primes -> class id
  std::vector<long> Sx;                          // ascending
  FrobeniusData frob;                            // on S0 ∪ Sx
  long p_minus1 = 0, p0 = 0;
  Int beta, Bx, Pi_x, rho;
  Rat chi;
  Int expected_count;  // prod nu(F_p), wildcard primes contribute p
  std::string cache_dir;

  // CRT layer: (modulus, admissible residues ascending) per plan prime,
  // ascending modulus keys; S primes enter with modulus p^2.
  std::vector<std::pair<Int, std::vector<Int>>> moduli;
};

SievePlan plan(const CoverModel& model, double x, const std::vector<long>& S,
               const FrobeniusData& frob_on_Sx, const std::string& cache_dir = "");

// All members of the sieve set in [1, B(x)], ascending.  Exactly
// expected_count integers.  Parallel chunked enumeration, deterministic.
std::vector<Int> assemble(const SievePlan& plan);

struct SpecializationRecord {
  Int t0;
  Int disc_multiple;  // |Delta_P(t0)|
  std::vector<std::pair<long, std::string>> class_hits;  // plan primes, ascending
  std::vector<std::pair<long, bool>> ram_hits;           // S primes: v_p witness
  bool full_group_certified = false;
  bool within_rho = false;
  std::optional<long> split_prime;  // where the trivial class was observed
};

// Recomputes every condition independently of the CRT assembly.  Throws
// std::logic_error if the observed class contradicts the plan.
SpecializationRecord certify(const Int& t0, const SievePlan& plan);

// Oracle: direct loop over [1, min(B(x), limit)] testing membership via
// frobenius_class and the ramification cosets; true iff it reproduces
// assemble() exactly on that range.
bool brute_force_cross_check(const SievePlan& plan, const Int& limit);

struct UpperBoundReport {
  Int exact;            // prod nu(F_p) over Sx
  Rat bound;            // chi * Pi(Sx)/beta * (2-lambda)^{|Sx|}
  Rat bound_no_beta;    // same without the 1/beta factor
  Rat lambda;           // (r|G|-1)/(r|G|)^2
  bool pass;            // exact <= bound (reported, not asserted)
  size_t sx_size = 0;
};

UpperBoundReport upper_bound_check(const CoverModel& model, double x,
                                   const FrobeniusData& frob_on_Sx,
                                   const std::string& cache_dir = "");

// Membership test used by the brute-force oracle; exposed for tests.
bool sieve_member(const SievePlan& plan, const Int& t0);

}  // namespace malle
