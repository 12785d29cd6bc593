/* Lower bounds on the number of distinct specialized fields.  Separation is
   by Frobenius fingerprints over a window of good primes: two records end up
   in different parts only when some window prime carries two genuinely
   different unramified factorization types, which certifies the fields are
   non-isomorphic.  Fingerprint collisions merge records and only lower the
   reported count, so the bound stays sound.  For |G| = 2 the squarefree
   kernel of f(t0) is a complete isomorphism invariant and the count is
   exact; the fingerprint partition is validated against it. */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "malle/cover.hpp"

namespace malle {

// Per-window-prime signature entry: a class index (>= 0 into the model's
// class table), or Ramified / Excluded.
enum : int { kSigRamified = -1, kSigExcluded = -2 };

struct Fingerprint {
  std::vector<long> window;  // ascending good primes <= P_max
  std::vector<int> sig;      // aligned with window
};

struct FieldKey {
  enum class Kind { Exact, FingerprintClass } kind;
  std::string value;
};

Fingerprint fingerprint(const CoverModel& model, const Int& t0, long p_max,
                        uint64_t seed = 1);

// Exact field key for quadratic models: signed squarefree kernel of f(t0).
Int quadratic_kernel(const CoverModel& model, const Int& t0);

struct DistinctReport {
  long distinct = 0;
  // part key -> members (ascending t0); the first member is the representative
  std::map<std::string, std::vector<Int>> parts;
  FieldKey::Kind kind = FieldKey::Kind::Exact;
};

// Partition records by field key.  Quadratic models use the exact kernel
// key unless force_fingerprint is set.
DistinctReport count_distinct(const std::vector<Int>& t0s, const CoverModel& model,
                              long p_max, bool force_fingerprint = false,
                              uint64_t seed = 1);

// Soundness re-verification: for every pair of distinct parts there is a
// window prime where both representatives carry different plain class ids.
// Returns false if any reported split lacks such a certificate.
bool verify_separation(const std::vector<Int>& t0s, const CoverModel& model,
                       long p_max, const DistinctReport& report, uint64_t seed = 1);

struct GrowthFit {
  double theta = 0;        // least-squares slope of log(count) vs log(B)
  double floor_theta = 0;  // 1 - 1/|G|
  std::vector<std::pair<Int, long>> counts;  // (B, distinct count)
};

// Distinct-field growth over unconstrained integer specializations t0 in
// [2, B], branch points skipped.  Grid must be >= 3 strictly increasing.
GrowthFit growth_fit(const CoverModel& model, const std::vector<Int>& b_grid,
                     long p_max = 1000, uint64_t seed = 1);

}  // namespace malle
