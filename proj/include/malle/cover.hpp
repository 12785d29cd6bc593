/* A regular Galois cover given by an integral affine model P(T,Y) plus
   trusted group metadata, with the derived structural data: Y-discriminants,
   branch points, bad primes and the prime frame (p_-1, p_0).

   Frobenius classes are identified by cycle type on the roots of the
   observation polynomial Q (Q = P for the quadratic model), so the class
   table must have pairwise distinct cycle types; models violating that are
   rejected at build time.  Branch-locus data (rational branch points,
   residue exclusion, bad primes) is read off rad(Delta_Q) — for genuine
   models this is the same locus as rad(Delta_P), and it is the one the
   factorization pipeline can see.  Delta_P supplies delta_P, H(Delta_P) and
   the per-specialization discriminant multiple. */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "malle/bipoly.hpp"

namespace malle {

struct ConjClass {
  std::string id;
  long size = 0;
  long element_order = 0;
  std::vector<int> cycle_type;  // sorted ascending
};

struct CoverModel {
  BiPoly P;  // integral affine model, monic in Y, deg_Y = |G|
  BiPoly Q;  // observation polynomial, monic in Y
  long group_order = 0;
  std::vector<ConjClass> classes;  // sorted by id
  long genus = 0;
  long branch_count = 0;

  UniPoly disc;       // Delta_P
  long delta_P = 0;   // deg Delta_P
  Int height_disc;    // H(Delta_P)
  UniPoly obs_disc;   // Delta_Q (== disc when P == Q)
  UniPoly obs_rad;    // rad(Delta_Q), primitive, positive lc
  std::vector<Rat> rational_branch_points;  // ascending
  std::vector<long> bad_primes;             // ascending, certified superset

  std::string hash;  // FNV-1a over the canonical serialization

  bool is_bad(long p) const;
  const ConjClass* class_by_type(const std::vector<int>& type) const;
  const ConjClass& trivial_class() const;  // cycle type (1,...,1)
  std::vector<Int> integer_branch_points() const;
  // The designated t1 of condition (b): the integer branch point of smallest
  // absolute value preferring nonzero ones; nullopt if none is an integer.
  std::optional<Int> designated_t1() const;
};

struct GroupMeta {
  long order = 0;
  std::vector<ConjClass> classes;
  long genus = 0;
  long branch_count = 0;
};

// Validates and derives everything; throws std::invalid_argument on any
// violated model invariant.
CoverModel build_model(const BiPoly& P, const BiPoly& Q, const GroupMeta& meta);

struct PrimeFrame {
  std::vector<long> bad_primes;
  long p_minus1 = 0;
  long p0 = 0;
};

PrimeFrame prime_frame(const CoverModel& model);

// Model file I/O per the documented JSON schema.
nlohmann::json model_to_json(const CoverModel& model);
CoverModel model_from_json(const nlohmann::json& j);
CoverModel load_model_file(const std::string& path);

}  // namespace malle
