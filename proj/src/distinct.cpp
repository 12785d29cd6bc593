#include "malle/distinct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "malle/frobenius.hpp"

namespace malle {

namespace {

int class_index(const CoverModel& model, const std::string& id) {
  for (size_t i = 0; i < model.classes.size(); ++i)
    if (model.classes[i].id == id) return static_cast<int>(i);
  throw std::logic_error("unknown class id " + id);
}

std::vector<long> window_primes(const CoverModel& model, long p_max) {
  std::vector<long> out;
  for (long p : primes_up_to(p_max))
    if (!model.is_bad(p)) out.push_back(p);
  return out;
}

bool quadratic_exact_available(const CoverModel& model) {
  return model.group_order == 2 && model.Q.deg_Y() == 2 &&
         model.Q.coeff_of_y(1).is_zero();
}

// f(T) with Q = Y^2 - f.
UniPoly quadratic_f(const CoverModel& model) { return -model.Q.coeff_of_y(0); }

}  // namespace

Int quadratic_kernel(const CoverModel& model, const Int& t0) {
  if (!quadratic_exact_available(model))
    throw std::invalid_argument("exact kernel needs a Y^2 - f(T) model");
  Int v = quadratic_f(model).eval_int(t0);
  if (v == 0) throw std::invalid_argument("t0 is a branch point");
  return squarefree_kernel(v);
}

Fingerprint fingerprint(const CoverModel& model, const Int& t0, long p_max,
                        uint64_t seed) {
  Fingerprint fp;
  fp.window = window_primes(model, p_max);
  fp.sig.reserve(fp.window.size());

  if (quadratic_exact_available(model)) {
    // Field-intrinsic signature: the kernel determines the quadratic field,
    // so ramification and splitting are read from it rather than from f(t0),
    // making equal-field records agree at every window prime.
    Int k = quadratic_kernel(model, t0);  // throws on branch points
    int split_idx = class_index(model, model.trivial_class().id);
    int inert_idx = 1 - split_idx;  // exactly two classes
    for (long p : fp.window) {
      if (mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(p))) {
        fp.sig.push_back(kSigRamified);
        continue;
      }
      fp.sig.push_back(legendre(k, p) == 1 ? split_idx : inert_idx);
    }
    return fp;
  }

  Int obs_disc_val = model.obs_disc.eval_int(t0);
  if (obs_disc_val == 0) throw std::invalid_argument("t0 is a branch point");
  for (long p : fp.window) {
    FrobResult fr = frobenius_class(model, p, t0, seed);
    if (fr.kind == FrobKind::Class) {
      fp.sig.push_back(class_index(model, fr.class_id));
    } else {
      // excluded residue: record Ramified when the specialized discriminant
      // has positive valuation (always the case for good p), else Excluded
      fp.sig.push_back(valuation(obs_disc_val, p) > 0 ? kSigRamified : kSigExcluded);
    }
  }
  return fp;
}

namespace {

// Two signatures are provably separated iff some position carries two
// different plain class ids (Ramified/Excluded entries prove nothing).
bool separated(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] >= 0 && b[i] >= 0 && a[i] != b[i]) return true;
  return false;
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

std::string sig_string(const std::vector<int>& sig) {
  std::string s;
  for (int v : sig) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

}  // namespace

DistinctReport count_distinct(const std::vector<Int>& t0s, const CoverModel& model,
                              long p_max, bool force_fingerprint, uint64_t seed) {
  DistinctReport rep;
  std::vector<Int> sorted(t0s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  if (quadratic_exact_available(model) && !force_fingerprint) {
    rep.kind = FieldKey::Kind::Exact;
    for (const Int& t : sorted)
      rep.parts[quadratic_kernel(model, t).get_str()].push_back(t);
    rep.distinct = static_cast<long>(rep.parts.size());
    return rep;
  }

  rep.kind = FieldKey::Kind::FingerprintClass;
  // Group by raw signature first, then merge groups that no window prime
  // provably separates (they may share a field through ramified positions).
  std::map<std::string, size_t> group_of;
  std::vector<std::vector<int>> sigs;
  std::vector<std::vector<Int>> members;
  for (const Int& t : sorted) {
    Fingerprint fp = fingerprint(model, t, p_max, seed);
    std::string key = sig_string(fp.sig);
    auto [it, inserted] = group_of.try_emplace(key, sigs.size());
    if (inserted) {
      sigs.push_back(fp.sig);
      members.emplace_back();
    }
    members[it->second].push_back(t);
  }

  UnionFind uf(sigs.size());
  for (size_t i = 0; i < sigs.size(); ++i)
    for (size_t j = i + 1; j < sigs.size(); ++j)
      if (uf.find(i) != uf.find(j) && !separated(sigs[i], sigs[j])) uf.unite(i, j);

  std::map<size_t, std::vector<Int>> merged;
  for (size_t i = 0; i < sigs.size(); ++i) {
    auto& dst = merged[uf.find(i)];
    dst.insert(dst.end(), members[i].begin(), members[i].end());
  }
  for (auto& [root, mem] : merged) {
    std::sort(mem.begin(), mem.end());
    rep.parts["fp:" + sig_string(sigs[root])] = mem;
  }
  rep.distinct = static_cast<long>(rep.parts.size());
  return rep;
}

bool verify_separation(const std::vector<Int>& t0s, const CoverModel& model,
                       long p_max, const DistinctReport& report, uint64_t seed) {
  (void)t0s;
  // Every cross-part pair of representatives must carry a certificate; use
  // fingerprint signatures regardless of the key kind.
  std::vector<std::vector<int>> reps;
  for (const auto& [key, mem] : report.parts)
    reps.push_back(fingerprint(model, mem.front(), p_max, seed).sig);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (!separated(reps[i], reps[j])) return false;
  return true;
}

GrowthFit growth_fit(const CoverModel& model, const std::vector<Int>& b_grid,
                     long p_max, uint64_t seed) {
  if (b_grid.size() < 3) throw std::invalid_argument("growth_fit needs >= 3 grid points");
  for (size_t i = 1; i < b_grid.size(); ++i)
    if (!(b_grid[i - 1] < b_grid[i]))
      throw std::invalid_argument("growth_fit grid must be strictly increasing");

  GrowthFit fit;
  fit.floor_theta = 1.0 - 1.0 / static_cast<double>(model.group_order);

  std::vector<Int> branch = model.integer_branch_points();
  bool exact = quadratic_exact_available(model);
  // Incremental: one pass up to the largest B, recording counts at each cut.
  std::set<std::string> keys;
  std::vector<Int> pending;  // non-quadratic path collects and recounts per cut
  size_t cut = 0;
  for (Int t = 2; t <= b_grid.back() && cut < b_grid.size(); ++t) {
    while (cut < b_grid.size() && t > b_grid[cut]) {
      fit.counts.emplace_back(b_grid[cut],
                              exact ? static_cast<long>(keys.size())
                                    : count_distinct(pending, model, p_max, false, seed).distinct);
      ++cut;
    }
    if (cut >= b_grid.size()) break;
    if (std::find(branch.begin(), branch.end(), t) != branch.end()) continue;
    if (exact)
      keys.insert(quadratic_kernel(model, t).get_str());
    else
      pending.push_back(t);
  }
  while (cut < b_grid.size()) {
    fit.counts.emplace_back(b_grid[cut],
                            exact ? static_cast<long>(keys.size())
                                  : count_distinct(pending, model, p_max, false, seed).distinct);
    ++cut;
  }

  // Least-squares slope of log(count) against log(B).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = fit.counts.size();
  for (auto& [B, c] : fit.counts) {
    if (c <= 0) throw std::invalid_argument("growth_fit: empty count at a grid point");
    double x = std::log(mpz_get_d(B.get_mpz_t()));
    double y = std::log(static_cast<double>(c));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = static_cast<double>(n) * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("growth_fit: degenerate grid");
  fit.theta = (static_cast<double>(n) * sxy - sx * sy) / denom;
  return fit;
}

}  // namespace malle
