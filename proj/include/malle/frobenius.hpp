/* Per-prime local analysis: Frobenius class of a specialization read off
   the factorization type of Q(t0, Y) mod p, full residue classification
   (the coset sets T(F_p) and counts nu(F_p)), and the exact Lang-Weil
   window checks.  The sqrt(p) in the bounds is never floated: comparisons
   are rearranged and squared so ties are decided exactly. */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "malle/cover.hpp"

namespace malle {

enum class FrobKind { Class, Excluded, BadPrime };

struct FrobResult {
  FrobKind kind;
  std::string class_id;  // set iff kind == Class
};

// Class of the specialization at t0 mod p.  Depends only on t0 mod p.
// Excluded = t0 meets the branch locus mod p (Delta_Q(t0) = 0 mod p).
FrobResult frobenius_class(const CoverModel& model, long p, const Int& t0,
                           uint64_t seed = 1);

struct LocalCosetData {
  long p = 0;
  std::vector<long> excluded;                          // ascending residues
  std::map<std::string, std::vector<long>> class_residues;  // ascending
  std::map<std::string, long> nu;

  bool operator==(const LocalCosetData&) const = default;
};

// Full classification of the p residues; p must be good.
LocalCosetData local_scan(const CoverModel& model, long p);

// Same, backed by an atomically written JSON cache keyed on
// (model hash, p).  cache_dir empty = MALLE_CACHE env or ./.malle-cache.
LocalCosetData local_scan_cached(const CoverModel& model, long p,
                                 std::string cache_dir = "");

std::string default_cache_dir();

// Parallel scans for all good primes in [lo, hi], ascending merge order.
std::vector<LocalCosetData> local_scan_range(const CoverModel& model, long lo,
                                             long hi, const std::string& cache_dir = "");

struct Prop41Row {
  std::string class_id;
  long nu = 0;
  // Outward rational enclosures of the Lang-Weil window (exact when g = 0);
  // the pass flag always comes from the exact squared comparison.
  Rat lower, upper;
  bool pass = false;
  bool lower_positive = false;  // right-hand side > 0 (guaranteed p >= r^2|G|^2)
  bool small_prime = false;     // p < r^2 |G|^2: bounds may be vacuous
};

std::vector<Prop41Row> check_prop41(const LocalCosetData& data, const CoverModel& model);

nlohmann::json local_to_json(const LocalCosetData& d);
LocalCosetData local_from_json(const nlohmann::json& j);

}  // namespace malle
