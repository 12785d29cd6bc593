#include "malle/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace malle {

Rat FrobeniusData::chi(const CoverModel& model) const {
  Rat c = 1;
  for (const auto& [p, fs] : by_prime) {
    if (fs.wildcard) continue;
    long total = 0;
    for (const auto& id : fs.ids) {
      for (const auto& cl : model.classes)
        if (cl.id == id) total += cl.size;
    }
    c *= Rat(total, model.group_order);
  }
  return c;
}

void FrobeniusData::validate(const CoverModel& model) const {
  for (const auto& [p, fs] : by_prime) {
    if (!is_prime(p)) throw std::invalid_argument("Frobenius data on non-prime");
    if (fs.wildcard) continue;
    if (fs.ids.empty()) throw std::invalid_argument("empty class set at prime");
    for (const auto& id : fs.ids) {
      bool found = false;
      for (const auto& cl : model.classes) found |= cl.id == id;
      if (!found) throw std::invalid_argument("unknown class id: " + id);
    }
  }
}

SievePlan plan(const CoverModel& model, double x, const std::vector<long>& S,
               const FrobeniusData& frob_on_Sx, const std::string& cache_dir) {
  SievePlan pl;
  pl.model = model;
  pl.x = x;
  pl.cache_dir = cache_dir;
  PrimeFrame fr = prime_frame(model);
  pl.p_minus1 = fr.p_minus1;
  pl.p0 = fr.p0;
  if (!(x > static_cast<double>(fr.p0)))
    throw std::invalid_argument("x must exceed p0 = " + std::to_string(fr.p0));

  frob_on_Sx.validate(model);

  // Conditions (a)/(b) on S.
  pl.S = S;
  std::sort(pl.S.begin(), pl.S.end());
  pl.t1 = model.designated_t1();
  if (!pl.S.empty()) {
    if (!pl.t1)
      throw std::invalid_argument("S must be empty: no integer branch point");
    for (long p : pl.S) {
      if (model.is_bad(p)) throw std::invalid_argument("S contains a bad prime");
      if (p > fr.p_minus1 && p <= fr.p0)
        throw std::invalid_argument("S meets ]p_-1, p0]");
      if (*pl.t1 % p == 0)
        throw std::invalid_argument("S contains a prime dividing t1");
      if (static_cast<double>(p) > x)
        throw std::invalid_argument("S primes must be <= x");
    }
  }

  // S0: the primes of ]p_-1, p0] paired with the nontrivial classes by id.
  std::vector<std::string> nontrivial;
  for (const auto& c : model.classes)
    if (c.id != model.trivial_class().id) nontrivial.push_back(c.id);
  std::sort(nontrivial.begin(), nontrivial.end());
  long p = fr.p_minus1;
  for (const auto& id : nontrivial) {
    p = next_prime_after(p);
    pl.S0.emplace_back(p, id);
  }

  // Sx: primes in ]p0, x] not in S.
  for (long q : primes_up_to(static_cast<long>(x)))
    if (q > fr.p0 && !std::binary_search(pl.S.begin(), pl.S.end(), q))
      pl.Sx.push_back(q);

  // Frobenius data on S0 ∪ Sx: S0 fixed by the bijection, Sx from the user
  // (missing primes are wildcards).
  for (const auto& [q, id] : pl.S0) pl.frob.by_prime[q] = ClassSet{false, {id}};
  for (long q : pl.Sx) {
    auto it = frob_on_Sx.by_prime.find(q);
    pl.frob.by_prime[q] = it == frob_on_Sx.by_prime.end() ? ClassSet{true, {}} : it->second;
  }

  pl.beta = prime_product([&] {
    std::vector<long> s0;
    for (auto& [q, id] : pl.S0) s0.push_back(q);
    return s0;
  }());
  Int piS = prime_product(pl.S);
  pl.Bx = pl.beta * piS * piS * prime_product(pl.Sx);
  pl.Pi_x = primorial(x);
  // rho(x) = (1 + delta_P) H(Delta_P) [Pi(S) Pi(x)]^delta_P
  Int base = piS * pl.Pi_x, pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(model.delta_P));
  pl.rho = Int(1 + model.delta_P) * model.height_disc * pw;
  pl.chi = pl.frob.chi(model);

  // nu per plan prime and the CRT residue lists.
  pl.expected_count = 1;
  for (const auto& [q, fs] : pl.frob.by_prime) {
    std::vector<Int> residues;
    if (fs.wildcard) {
      for (long r = 0; r < q; ++r) residues.emplace_back(r);
    } else {
      LocalCosetData d = local_scan_cached(model, q, cache_dir);
      std::vector<long> rs;
      for (const auto& id : fs.ids) {
        const auto& v = d.class_residues.at(id);
        rs.insert(rs.end(), v.begin(), v.end());
      }
      std::sort(rs.begin(), rs.end());
      for (long r : rs) residues.emplace_back(r);
    }
    if (residues.empty())
      throw std::invalid_argument("empty residue set at prime " + std::to_string(q));
    pl.expected_count *= static_cast<long>(residues.size());
    pl.moduli.emplace_back(Int(q), std::move(residues));
  }
  for (long q : pl.S) {
    Int p2 = Int(q) * q;
    Int residue = (*pl.t1 + q) % p2;
    if (residue < 0) residue += p2;
    pl.moduli.emplace_back(p2, std::vector<Int>{residue});
  }
  return pl;
}

std::vector<Int> assemble(const SievePlan& plan) {
  std::vector<Int> mods;
  for (const auto& [m, r] : plan.moduli) mods.push_back(m);
  Int M;
  std::vector<Int> basis = mods.empty() ? std::vector<Int>{} : crt_basis(mods, M);
  if (mods.empty()) M = 1;
  if (M != plan.Bx) throw std::logic_error("modulus product != B(x)");

  // Mixed-radix enumeration over residue choices, chunked for parallelism.
  Int total = 1;
  std::vector<size_t> radix;
  for (const auto& [m, r] : plan.moduli) {
    radix.push_back(r.size());
    total *= static_cast<long>(r.size());
  }
  if (!total.fits_ulong_p())
    throw std::invalid_argument("sieve set too large to enumerate");
  size_t n = total.get_ui();

  std::vector<Int> out(n);
  unsigned nthreads = static_cast<unsigned>(
      std::min<size_t>(worker_threads(), std::max<size_t>(n, 1)));
  size_t chunk = (n + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) {
    size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      std::vector<size_t> idx(radix.size(), 0);
      size_t rem = lo;
      for (size_t k = 0; k < radix.size(); ++k) {
        idx[k] = rem % radix[k];
        rem /= radix[k];
      }
      for (size_t i = lo; i < hi; ++i) {
        Int acc = 0;
        for (size_t k = 0; k < idx.size(); ++k)
          acc += plan.moduli[k].second[idx[k]] * basis[k];
        acc %= M;
        if (acc <= 0) acc += M;  // representatives in [1, B(x)]
        out[i] = acc;
        for (size_t k = 0; k < idx.size(); ++k) {  // increment mixed-radix
          if (++idx[k] < radix[k]) break;
          idx[k] = 0;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end());
  return out;
}

bool sieve_member(const SievePlan& plan, const Int& t0) {
  for (const auto& [q, fs] : plan.frob.by_prime) {
    if (fs.wildcard) continue;
    FrobResult fr = frobenius_class(plan.model, q, t0);
    if (fr.kind != FrobKind::Class) return false;
    if (!fs.ids.count(fr.class_id)) return false;
  }
  for (long q : plan.S) {
    Int p2 = Int(q) * q;
    Int want = (*plan.t1 + q) % p2, got = t0 % p2;
    if (want < 0) want += p2;
    if (got < 0) got += p2;
    if (want != got) return false;
  }
  return true;
}

SpecializationRecord certify(const Int& t0, const SievePlan& plan) {
  SpecializationRecord rec;
  rec.t0 = t0;
  rec.disc_multiple = abs(plan.model.disc.eval_int(t0));

  bool trivial_hit = false;
  std::set<std::string> nontrivial_missing;
  for (const auto& c : plan.model.classes)
    if (c.id != plan.model.trivial_class().id) nontrivial_missing.insert(c.id);

  for (const auto& [q, fs] : plan.frob.by_prime) {
    FrobResult fr = frobenius_class(plan.model, q, t0);
    if (!fs.wildcard) {
      if (fr.kind != FrobKind::Class || !fs.ids.count(fr.class_id))
        throw std::logic_error("certify: observed class contradicts the plan at p=" +
                               std::to_string(q));
    }
    if (fr.kind == FrobKind::Class) {
      rec.class_hits.emplace_back(q, fr.class_id);
      nontrivial_missing.erase(fr.class_id);
      if (fr.class_id == plan.model.trivial_class().id) {
        trivial_hit = true;
        if (!rec.split_prime) rec.split_prime = q;
      }
    }
  }

  // Jordan certificate: all nontrivial classes observed, plus a split prime
  // witnessing the trivial class (searched beyond the plan when needed).
  if (!trivial_hit) {
    long q = plan.p0;
    for (int tries = 0; tries < 500 && !trivial_hit; ++tries) {
      q = next_prime_after(q);
      if (plan.model.is_bad(q) || plan.frob.by_prime.count(q)) continue;
      FrobResult fr = frobenius_class(plan.model, q, t0);
      if (fr.kind == FrobKind::Class && fr.class_id == plan.model.trivial_class().id) {
        trivial_hit = true;
        rec.split_prime = q;
      }
    }
  }
  rec.full_group_certified = trivial_hit && nontrivial_missing.empty();

  // Ramification witnesses: coset certificate is rechecked, the computable
  // necessary witness is v_p(disc Q(t0, Y)) > 0.
  if (!plan.S.empty()) {
    Int obs_disc_val = plan.model.obs_disc.eval_int(t0);
    for (long q : plan.S) {
      Int p2 = Int(q) * q;
      Int want = (*plan.t1 + q) % p2, got = t0 % p2;
      if (want < 0) want += p2;
      if (got < 0) got += p2;
      if (want != got)
        throw std::logic_error("certify: ramification coset violated at p=" +
                               std::to_string(q));
      rec.ram_hits.emplace_back(q, obs_disc_val != 0 && valuation(obs_disc_val, q) > 0);
    }
  }

  rec.within_rho = rec.disc_multiple <= plan.rho;
  return rec;
}

bool brute_force_cross_check(const SievePlan& plan, const Int& limit) {
  Int cap = std::min(limit, plan.Bx);
  std::vector<Int> expected;
  for (const Int& t : assemble(plan))
    if (t <= cap) expected.push_back(t);

  unsigned nthreads = worker_threads();
  if (!cap.fits_ulong_p()) throw std::invalid_argument("brute-force limit too large");
  uint64_t N = cap.get_ui();
  std::vector<std::vector<Int>> found(nthreads);
  std::vector<std::thread> pool;
  uint64_t chunk = (N + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    uint64_t lo = 1 + t * chunk, hi = std::min<uint64_t>(N, (t + 1) * chunk);
    if (lo > hi) break;
    pool.emplace_back([&, t, lo, hi] {
      for (uint64_t v = lo; v <= hi; ++v) {
        Int t0(static_cast<unsigned long>(v));
        if (sieve_member(plan, t0)) found[t].push_back(t0);
      }
    });
  }
  for (auto& th : pool) th.join();
  std::vector<Int> got;
  for (auto& v : found) got.insert(got.end(), v.begin(), v.end());
  std::sort(got.begin(), got.end());
  return got == expected;
}

UpperBoundReport upper_bound_check(const CoverModel& model, double x,
                                   const FrobeniusData& frob_on_Sx,
                                   const std::string& cache_dir) {
  UpperBoundReport rep;
  PrimeFrame fr = prime_frame(model);
  if (!(x > static_cast<double>(fr.p0)))
    throw std::invalid_argument("x must exceed p0");
  frob_on_Sx.validate(model);
  std::vector<long> Sx;
  for (long q : primes_up_to(static_cast<long>(x)))
    if (q > fr.p0) Sx.push_back(q);
  rep.sx_size = Sx.size();

  rep.exact = 1;
  Rat chi = 1;
  for (long q : Sx) {
    auto it = frob_on_Sx.by_prime.find(q);
    if (it == frob_on_Sx.by_prime.end() || it->second.wildcard) {
      rep.exact *= q;
      continue;
    }
    LocalCosetData d = local_scan_cached(model, q, cache_dir);
    long nu = 0, size = 0;
    for (const auto& id : it->second.ids) {
      nu += d.nu.at(id);
      for (const auto& cl : model.classes)
        if (cl.id == id) size += cl.size;
    }
    rep.exact *= nu;
    chi *= Rat(size, model.group_order);
  }

  long rG = model.branch_count * model.group_order;
  rep.lambda = Rat(rG - 1, rG * rG);
  Int beta = 1;
  {
    long p = fr.p_minus1;
    for (size_t i = 0; i + 1 < model.classes.size(); ++i) {
      p = next_prime_after(p);
      beta *= p;
    }
  }
  Rat two_minus_lambda = Rat(2) - rep.lambda;
  Rat pw = 1;
  for (size_t i = 0; i < Sx.size(); ++i) pw *= two_minus_lambda;
  rep.bound_no_beta = chi * Rat(prime_product(Sx)) * pw;
  rep.bound = rep.bound_no_beta / Rat(beta);
  rep.pass = Rat(rep.exact) <= rep.bound;
  return rep;
}

}  // namespace malle
