#include "malle/frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <unistd.h>

#include "malle/modpoly.hpp"

namespace malle {

namespace {

// Q(t0, Y) mod p from the column polynomials, all reduced mod p.
ModPoly specialize_obs(const CoverModel& model, uint64_t p, uint64_t t0) {
  std::vector<uint64_t> c(static_cast<size_t>(model.Q.deg_Y()) + 1, 0);
  for (int j = 0; j <= model.Q.deg_Y(); ++j)
    c[static_cast<size_t>(j)] = model.Q.coeff_of_y(j).reduce_mod(p).eval(t0);
  return ModPoly(p, std::move(c));
}

uint64_t residue_of(const Int& t0, long p) {
  Int r = t0 % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

FrobResult frobenius_class(const CoverModel& model, long p, const Int& t0, uint64_t seed) {
  if (model.is_bad(p)) return {FrobKind::BadPrime, {}};
  uint64_t up = static_cast<uint64_t>(p);
  uint64_t r = residue_of(t0, p);
  if (model.obs_disc.reduce_mod(up).eval(r) == 0) return {FrobKind::Excluded, {}};
  ModPoly f = specialize_obs(model, up, r);
  std::vector<int> type = factor_mod_p(f, seed).type();
  const ConjClass* c = model.class_by_type(type);
  if (!c)
    throw std::logic_error("factorization type matches no conjugacy class (p=" +
                           std::to_string(p) + ")");
  return {FrobKind::Class, c->id};
}

LocalCosetData local_scan(const CoverModel& model, long p) {
  if (model.is_bad(p)) throw std::invalid_argument("local_scan on a bad prime");
  LocalCosetData d;
  d.p = p;
  for (const auto& c : model.classes) {
    d.class_residues[c.id];
    d.nu[c.id] = 0;
  }
  uint64_t up = static_cast<uint64_t>(p);
  ModPoly disc_p = model.obs_disc.reduce_mod(up);
  std::vector<ModPoly> cols;
  for (int j = 0; j <= model.Q.deg_Y(); ++j)
    cols.push_back(model.Q.coeff_of_y(j).reduce_mod(up));
  for (uint64_t t = 0; t < up; ++t) {
    if (disc_p.eval(t) == 0) {
      d.excluded.push_back(static_cast<long>(t));
      continue;
    }
    std::vector<uint64_t> c(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) c[j] = cols[j].eval(t);
    std::vector<int> type = factor_mod_p(ModPoly(up, std::move(c))).type();
    const ConjClass* cl = model.class_by_type(type);
    if (!cl)
      throw std::logic_error("factorization type matches no conjugacy class (p=" +
                             std::to_string(p) + ", t=" + std::to_string(t) + ")");
    d.class_residues[cl->id].push_back(static_cast<long>(t));
    d.nu[cl->id]++;
  }
  return d;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("MALLE_CACHE")) return env;
  return ".malle-cache";
}

nlohmann::json local_to_json(const LocalCosetData& d) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [id, res] : d.class_residues) classes[id] = res;
  return nlohmann::json{{"p", d.p}, {"excluded", d.excluded}, {"class_residues", classes}};
}

LocalCosetData local_from_json(const nlohmann::json& j) {
  LocalCosetData d;
  d.p = j.at("p").get<long>();
  d.excluded = j.at("excluded").get<std::vector<long>>();
  for (const auto& [id, res] : j.at("class_residues").items()) {
    d.class_residues[id] = res.get<std::vector<long>>();
    d.nu[id] = static_cast<long>(d.class_residues[id].size());
  }
  return d;
}

LocalCosetData local_scan_cached(const CoverModel& model, long p, std::string cache_dir) {
  namespace fs = std::filesystem;
  if (cache_dir.empty()) cache_dir = default_cache_dir();
  fs::path dir = fs::path(cache_dir) / model.hash;
  fs::path file = dir / (std::to_string(p) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    return local_from_json(j);
  }
  LocalCosetData d = local_scan(model, p);
  std::error_code ec;
  fs::create_directories(dir, ec);
  // atomic write-rename so concurrent scans of the same prime stay idempotent
  fs::path tmp = dir / (std::to_string(p) + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    out << local_to_json(d).dump();
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
  return d;
}

std::vector<LocalCosetData> local_scan_range(const CoverModel& model, long lo, long hi,
                                             const std::string& cache_dir) {
  std::vector<long> ps;
  for (long p : primes_up_to(hi))
    if (p >= lo && !model.is_bad(p)) ps.push_back(p);
  std::vector<LocalCosetData> out(ps.size());
  unsigned nthreads = static_cast<unsigned>(
      std::min<size_t>(worker_threads(), std::max<size_t>(ps.size(), 1)));
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      size_t i;
      while ((i = next.fetch_add(1)) < ps.size())
        out[i] = local_scan_cached(model, ps[i], cache_dir);
    });
  for (auto& th : pool) th.join();
  return out;  // ascending p by construction
}

std::vector<Prop41Row> check_prop41(const LocalCosetData& data, const CoverModel& model) {
  std::vector<Prop41Row> rows;
  long p = data.p, G = model.group_order, g = model.genus, r = model.branch_count;
  long small_cut = r * r * G * G;
  // ceil(2g sqrt(p)) for the reported rational enclosure
  Int s2;
  mpz_sqrt(s2.get_mpz_t(), Int(4 * g * g * p).get_mpz_t());
  if (s2 * s2 < 4 * g * g * p) s2 += 1;
  for (const auto& c : model.classes) {
    Prop41Row row;
    row.class_id = c.id;
    row.nu = data.nu.at(c.id);
    row.small_prime = p < small_cut;
    Rat ratio(c.size, G);
    row.lower = ratio * Rat(Int(p + 1 - G * (r + 1)) - s2);
    row.upper = ratio * Rat(Int(p + 1) + s2);
    // Exact tests.  Lower: nu*G/|C| - (p+1-|G|(r+1)) >= -2g sqrt(p); square
    // only when the left side is negative.  Upper symmetric.
    Rat a = Rat(row.nu) * Rat(G, c.size) - Rat(p + 1 - G * (r + 1));
    bool lower_ok = a >= 0 || a * a <= Rat(4 * g * g * p);
    Rat b = Rat(row.nu) * Rat(G, c.size) - Rat(p + 1);
    bool upper_ok = b <= 0 || b * b <= Rat(4 * g * g * p);
    row.pass = lower_ok && upper_ok;
    // RHS positivity: p+1-|G|(r+1) > 2g sqrt(p)
    Rat rhs = Rat(p + 1 - G * (r + 1));
    row.lower_positive = rhs > 0 && rhs * rhs > Rat(4 * g * g * p);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace malle
