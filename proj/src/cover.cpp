#include "malle/cover.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "malle/polyjson.hpp"

namespace malle {

bool CoverModel::is_bad(long p) const {
  return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}

const ConjClass* CoverModel::class_by_type(const std::vector<int>& type) const {
  for (const auto& c : classes)
    if (c.cycle_type == type) return &c;
  return nullptr;
}

const ConjClass& CoverModel::trivial_class() const {
  std::vector<int> ones(static_cast<size_t>(Q.deg_Y()), 1);
  const ConjClass* c = class_by_type(ones);
  if (!c) throw std::logic_error("class table has no trivial class");
  return *c;
}

std::vector<Int> CoverModel::integer_branch_points() const {
  std::vector<Int> out;
  for (const Rat& r : rational_branch_points)
    if (r.get_den() == 1) out.push_back(r.get_num());
  return out;
}

std::optional<Int> CoverModel::designated_t1() const {
  std::vector<Int> ib = integer_branch_points();
  if (ib.empty()) return std::nullopt;
  std::sort(ib.begin(), ib.end(), [](const Int& a, const Int& b) {
    Int aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab;
    return a > b;  // prefer the positive one on ties
  });
  for (const Int& t : ib)
    if (t != 0) return t;  // nonzero preferred: condition (b) needs p ∤ t1
  return ib.front();       // only 0 available
}

namespace {

std::vector<long> prime_divisors(const Int& n) {
  std::vector<long> out;
  if (n == 0) return out;
  Int m = abs(n);
  for (long p = 2; Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.push_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)))
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    }
  }
  if (m > 1) {
    if (!m.fits_slong_p())
      throw std::invalid_argument("bad-prime factorization exceeds long range");
    out.push_back(m.get_si());
  }
  return out;
}

std::string fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Bad primes, a certified superset: p | |G|, p | content(Delta), p | lc(Delta),
// p | disc(rad(Delta)).  Outside this set the branch divisor stays etale and
// the leading data does not degenerate.
std::vector<long> compute_bad_primes(long group_order, const UniPoly& obs_disc,
                                     const UniPoly& obs_rad) {
  std::set<long> bad;
  for (long p : prime_divisors(Int(group_order))) bad.insert(p);
  UniPoly dz = obs_disc.primitive_integer();
  // content of Delta as an integer polynomial
  {
    Int den_lcm = 1;
    for (const auto& c : obs_disc.coeffs())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int content = 0;
    for (const auto& c : obs_disc.coeffs()) {
      Int v = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    for (long p : prime_divisors(content)) bad.insert(p);
    for (long p : prime_divisors(obs_disc.lc().get_num())) bad.insert(p);
  }
  if (obs_rad.degree() >= 1) {
    Rat d = discriminant(obs_rad);
    for (long p : prime_divisors(d.get_num())) bad.insert(p);
    for (long p : prime_divisors(obs_rad.lc().get_num())) bad.insert(p);
  }
  return {bad.begin(), bad.end()};
}

}  // namespace

CoverModel build_model(const BiPoly& P, const BiPoly& Q, const GroupMeta& meta) {
  if (P.is_zero() || Q.is_zero()) throw std::invalid_argument("zero model polynomial");
  if (!P.is_monic_in_y()) throw std::invalid_argument("P is not monic in Y");
  if (!Q.is_monic_in_y()) throw std::invalid_argument("Q is not monic in Y");
  if (P.content() != 1) throw std::invalid_argument("P is not primitive");
  if (meta.order < 2) throw std::invalid_argument("group order must be >= 2");
  if (P.deg_Y() != meta.order)
    throw std::invalid_argument("deg_Y(P) must equal the group order");
  if (meta.branch_count < 1) throw std::invalid_argument("branch_count must be >= 1");
  if (meta.genus < 0) throw std::invalid_argument("genus must be >= 0");

  long size_sum = 0;
  std::set<std::vector<int>> seen_types;
  std::set<std::string> seen_ids;
  for (const auto& c : meta.classes) {
    if (c.size < 1 || c.element_order < 1 || c.id.empty())
      throw std::invalid_argument("malformed conjugacy class");
    size_sum += c.size;
    long type_sum = 0;
    std::vector<int> t = c.cycle_type;
    std::sort(t.begin(), t.end());
    if (t != c.cycle_type)
      throw std::invalid_argument("cycle types must be sorted ascending");
    for (int e : t) type_sum += e;
    if (type_sum != Q.deg_Y())
      throw std::invalid_argument("cycle type does not sum to deg_Y(Q)");
    if (!seen_types.insert(t).second)
      throw std::invalid_argument("duplicate cycle type: classes not separable");
    if (!seen_ids.insert(c.id).second)
      throw std::invalid_argument("duplicate class id");
  }
  if (size_sum != meta.order)
    throw std::invalid_argument("class sizes do not sum to the group order");

  CoverModel m;
  m.P = P;
  m.Q = Q;
  m.group_order = meta.order;
  m.classes = meta.classes;
  std::sort(m.classes.begin(), m.classes.end(),
            [](const ConjClass& a, const ConjClass& b) { return a.id < b.id; });
  m.genus = meta.genus;
  m.branch_count = meta.branch_count;

  m.disc = discriminant_y(P);
  if (m.disc.is_zero()) throw std::invalid_argument("Delta_P = 0: model not separable");
  m.delta_P = m.disc.degree();
  if (m.delta_P >= 2 * meta.order * P.deg_T())
    throw std::invalid_argument("delta_P < 2|G| deg_T(P) violated");
  {
    Rat h = m.disc.height();
    if (h.get_den() != 1) throw std::logic_error("Delta_P not integral");
    m.height_disc = h.get_num();
  }
  m.obs_disc = (P == Q) ? m.disc : discriminant_y(Q);
  if (m.obs_disc.is_zero())
    throw std::invalid_argument("Delta_Q = 0: observation polynomial not separable");
  m.obs_rad = squarefree_part(m.obs_disc);
  m.rational_branch_points = rational_roots(m.obs_rad);
  m.bad_primes = compute_bad_primes(meta.order, m.obs_disc, m.obs_rad);

  // Genus cross-check for quadratic models P = Y^2 - f(T).
  if (meta.order == 2 && P.coeff_of_y(1).is_zero()) {
    UniPoly f = -P.coeff_of_y(0);
    long g2 = (squarefree_part(f).degree() - 1) / 2;
    if (g2 != meta.genus)
      throw std::invalid_argument("genus metadata contradicts deg rad(f) for Y^2 - f");
  }

  m.hash = fnv1a(model_to_json(m).dump());
  return m;
}

PrimeFrame prime_frame(const CoverModel& model) {
  PrimeFrame fr;
  fr.bad_primes = model.bad_primes;
  long cut = model.branch_count * model.branch_count * model.group_order * model.group_order;
  long largest_below = 0;
  for (long p : primes_up_to(cut - 1)) largest_below = p;
  long largest_bad = model.bad_primes.empty() ? 0 : model.bad_primes.back();
  fr.p_minus1 = std::max(largest_below, largest_bad);
  long nontrivial = static_cast<long>(model.classes.size()) - 1;
  long p = fr.p_minus1;
  for (long i = 0; i < nontrivial; ++i) p = next_prime_after(p);
  fr.p0 = p;
  return fr;
}

nlohmann::json model_to_json(const CoverModel& model) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : model.classes)
    classes.push_back({{"id", c.id},
                       {"size", c.size},
                       {"order", c.element_order},
                       {"cycle_type", c.cycle_type}});
  return nlohmann::json{{"P", bipoly_to_json(model.P)},
                        {"Q", bipoly_to_json(model.Q)},
                        {"group", {{"order", model.group_order}, {"classes", classes}}},
                        {"genus", model.genus},
                        {"branch_count", model.branch_count}};
}

CoverModel model_from_json(const nlohmann::json& j) {
  GroupMeta meta;
  meta.order = j.at("group").at("order").get<long>();
  for (const auto& c : j.at("group").at("classes")) {
    ConjClass cc;
    cc.id = c.at("id").get<std::string>();
    cc.size = c.at("size").get<long>();
    cc.element_order = c.at("order").get<long>();
    cc.cycle_type = c.at("cycle_type").get<std::vector<int>>();
    meta.classes.push_back(std::move(cc));
  }
  meta.genus = j.at("genus").get<long>();
  meta.branch_count = j.at("branch_count").get<long>();
  BiPoly P = bipoly_from_json(j.at("P"));
  BiPoly Q = j.contains("Q") ? bipoly_from_json(j.at("Q")) : P;
  return build_model(P, Q, meta);
}

CoverModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file: " + path);
  nlohmann::json j;
  in >> j;
  return model_from_json(j);
}

}  // namespace malle
