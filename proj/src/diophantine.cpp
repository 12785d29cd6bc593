#include "malle/diophantine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace malle {

WalkowiakInstance WalkowiakInstance::make(const BiPoly& F, std::optional<Int> H_override) {
  if (F.is_zero()) throw std::invalid_argument("Walkowiak instance needs F != 0");
  if (!F.is_monic_in_y()) throw std::invalid_argument("F must be monic in Y");
  if (F.deg_Y() < 2) throw std::invalid_argument("deg_Y(F) >= 2 required");
  // cheap necessary separability condition (irreducibility is user-asserted)
  if (discriminant_y(F).is_zero())
    throw std::invalid_argument("F has zero Y-discriminant");
  WalkowiakInstance inst;
  inst.F = F;
  inst.m = F.deg_T();
  inst.n = F.deg_Y();
  inst.D = F.total_degree();
  inst.H = H_override ? *H_override : F.height();

  BigFloat h = BigFloat::from_int(inst.H, MPFR_RNDU);
  BigFloat ee = BigFloat::e_to_e(MPFR_RNDU);
  inst.Hplus_up = h.cmp(ee) >= 0 ? h : ee;
  inst.L1_up = inst.Hplus_up.log(MPFR_RNDU);
  // L2 rounded down so that L1/L2 rounds up where used as an upper bound
  BigFloat hplus_down = BigFloat::from_int(inst.H, MPFR_RNDD);
  BigFloat ee_down = BigFloat::e_to_e(MPFR_RNDD);
  BigFloat hp = hplus_down.cmp(ee_down) >= 0 ? hplus_down : ee_down;
  inst.L2_down = hp.log(MPFR_RNDD).log(MPFR_RNDD);
  return inst;
}

namespace {

// F is "binomial in Y" when only the Y^n and Y^0 columns are nonzero; the
// fiber is then Y^n + c(t0) and the integer-root test is a perfect-power
// test, cheap enough for decade grids up to 10^9.
bool binomial_in_y(const BiPoly& F) {
  for (int j = 1; j < F.deg_Y(); ++j)
    if (!F.coeff_of_y(j).is_zero()) return false;
  return true;
}

// Exact n-th root fast path on uint64 magnitudes: float seed plus exact
// neighbor confirmation.
bool u64_perfect_nth_root(uint64_t v, unsigned n, uint64_t& root) {
  if (v == 0) {
    root = 0;
    return true;
  }
  double approx = std::pow(static_cast<double>(v), 1.0 / n);
  uint64_t r0 = approx < 2 ? 0 : static_cast<uint64_t>(approx) - 2;
  for (uint64_t r = r0; r <= r0 + 4; ++r) {
    __uint128_t pw = 1;
    bool overflow = false;
    for (unsigned i = 0; i < n; ++i) {
      pw *= r;
      if (pw > (__uint128_t)UINT64_MAX * 2) {
        overflow = true;
        break;
      }
    }
    if (!overflow && pw == v) {
      root = r;
      return true;
    }
    if (!overflow && pw > v) return false;
  }
  return false;
}

}  // namespace

std::vector<Int> fiber_integer_roots(const WalkowiakInstance& inst, const Int& t0) {
  UniPoly fiber = inst.F.eval_T(Rat(t0));
  if (fiber.degree() != inst.n) throw std::logic_error("fiber degree dropped");
  return integer_roots_monic(fiber);
}

Int liouville_bound(const WalkowiakInstance& inst, const Int& B) {
  if (B < 1) throw std::invalid_argument("liouville_bound needs B >= 1");
  BigFloat b = BigFloat::from_int(B, MPFR_RNDU);
  BigFloat term = BigFloat::from_double(2.0 * static_cast<double>(inst.m + 1));
  BigFloat val = term.mul(inst.Hplus_up, MPFR_RNDU).mul(b.pow_si(inst.m, MPFR_RNDU), MPFR_RNDU);
  return val.ceil_to_int();
}

BruteZResult brute_Z(const WalkowiakInstance& inst, const Int& B, size_t sample_cap) {
  if (B < 1) throw std::invalid_argument("brute_Z needs B >= 1");
  if (!B.fits_ulong_p()) throw std::invalid_argument("brute_Z range too large");
  uint64_t N = B.get_ui();
  Int liouville = liouville_bound(inst, B);

  bool binom = binomial_in_y(inst.F);
  UniPoly c0 = inst.F.coeff_of_y(0);  // fiber constant term as poly in t
  unsigned n = static_cast<unsigned>(inst.n);

  // The uint64 fast lane applies while |c0(t0)| stays below 2^62; the bound
  // is monotone in t0 for t0 past the largest coefficient scale, so probe
  // the endpoints.
  auto c0_small = [&](uint64_t t) {
    Int v = c0.eval_int(Int(static_cast<unsigned long>(t)));
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
  };

  unsigned nthreads = worker_threads();
  std::vector<Int> counts(nthreads, 0);
  std::vector<std::vector<std::pair<Int, Int>>> samples(nthreads);
  std::atomic<bool> liouville_violated{false};
  uint64_t chunk = (N + nthreads - 1) / nthreads;

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < nthreads; ++w) {
    uint64_t lo = 1 + w * chunk, hi = std::min<uint64_t>(N, (w + 1) * chunk);
    if (lo > hi) continue;
    pool.emplace_back([&, w, lo, hi] {
      // per-thread integer coefficients of c0 for the uint64 Horner
      std::vector<Int> cz;
      for (int i = 0; i <= c0.degree(); ++i) cz.push_back(c0.coeff(static_cast<size_t>(i)).get_num());
      bool lane_ok = binom && c0_small(lo) && c0_small(hi);
      bool all_fit = lane_ok;
      for (const Int& c : cz) all_fit &= mpz_sizeinbase(c.get_mpz_t(), 2) <= 62;
      long local = 0;
      if (all_fit) {
        std::vector<int64_t> cc;
        for (const Int& c : cz) cc.push_back(c.get_si());
        for (uint64_t t = lo; t <= hi; ++t) {
          __int128 acc = 0;
          for (size_t i = cc.size(); i-- > 0;) acc = acc * (int64_t)t + cc[i];
          // fiber Y^n + acc = 0 -> y^n = -acc
          __int128 target = -acc;
          bool neg = target < 0;
          if (neg && n % 2 == 0) continue;
          uint64_t mag = static_cast<uint64_t>(neg ? -target : target);
          uint64_t root;
          if (u64_perfect_nth_root(mag, n, root)) {
            ++local;
            Int y = neg ? Int(-(long)root) : Int((unsigned long)root);
            if (abs(y) > liouville) liouville_violated = true;
            if (samples[w].size() < sample_cap / nthreads + 1)
              samples[w].emplace_back(Int(static_cast<unsigned long>(t)), y);
          }
        }
      } else {
        for (uint64_t t = lo; t <= hi; ++t) {
          Int t0(static_cast<unsigned long>(t));
          std::vector<Int> roots;
          if (binom) {
            Int c = c0.eval_int(t0), y;
            Int target = -c;
            if (exact_root(target, n, y)) {
              if (n % 2 == 1 || target >= 0) roots.push_back(y);
            }
          } else {
            roots = fiber_integer_roots(inst, t0);
          }
          if (!roots.empty()) {
            ++local;
            for (const Int& y : roots) {
              if (abs(y) > liouville) liouville_violated = true;
              if (samples[w].size() < sample_cap / nthreads + 1)
                samples[w].emplace_back(t0, y);
            }
          }
        }
      }
      counts[w] = local;
    });
  }
  for (auto& th : pool) th.join();
  if (liouville_violated)
    throw std::logic_error("Liouville bound violated by a found root");

  BruteZResult res;
  res.count = 0;
  for (const Int& c : counts) res.count += c;
  for (auto& v : samples)
    res.samples.insert(res.samples.end(), v.begin(), v.end());
  std::sort(res.samples.begin(), res.samples.end());
  if (res.samples.size() > sample_cap) res.samples.resize(sample_cap);
  return res;
}

CaseSelect case_select(const WalkowiakInstance& inst) {
  CaseSelect cs;
  if (inst.m == 0) {
    cs.case_no = 1;
    return cs;
  }
  // Interval for m n L1/L2, widening precision until floor and the
  // comparison with D are both unambiguous.
  for (mpfr_prec_t prec = BigFloat::kPrec; prec <= 4096; prec *= 2) {
    BigFloat h_up = BigFloat::from_int(inst.H, MPFR_RNDU, prec);
    BigFloat h_dn = BigFloat::from_int(inst.H, MPFR_RNDD, prec);
    BigFloat ee_up = BigFloat::e_to_e(MPFR_RNDU, prec);
    BigFloat ee_dn = BigFloat::e_to_e(MPFR_RNDD, prec);
    BigFloat hp_up = h_up.cmp(ee_up) >= 0 ? h_up : ee_up;
    BigFloat hp_dn = h_dn.cmp(ee_dn) >= 0 ? h_dn : ee_dn;
    BigFloat mn = BigFloat::from_double(static_cast<double>(inst.m) * inst.n, prec);
    BigFloat up = mn.mul(hp_up.log(MPFR_RNDU), MPFR_RNDU)
                      .div(hp_dn.log(MPFR_RNDD).log(MPFR_RNDD), MPFR_RNDU);
    BigFloat dn = mn.mul(hp_dn.log(MPFR_RNDD), MPFR_RNDD)
                      .div(hp_up.log(MPFR_RNDU).log(MPFR_RNDU), MPFR_RNDD);
    BigFloat Dv = BigFloat::from_double(static_cast<double>(inst.D), prec);
    if (up.cmp(Dv) <= 0) {
      cs.case_no = 1;
      return cs;
    }
    if (Dv.cmp(dn) < 0) {
      // Case 2; need floor of the ratio to be unambiguous too.
      long flo_dn = static_cast<long>(std::floor(dn.to_double()));
      long flo_up = static_cast<long>(std::floor(up.to_double()));
      if (flo_dn == flo_up) {
        cs.case_no = 2;
        cs.E = flo_dn + 1;
        return cs;
      }
    }
  }
  throw std::runtime_error("case_select: interval did not resolve at 4096 bits");
}

BigFloat central_bound(long D, const Int& B) {
  if (D < 1) throw std::invalid_argument("central_bound needs D >= 1");
  if (B < 2) throw std::invalid_argument("central_bound needs B >= 2");
  BigFloat b = BigFloat::from_int(B, MPFR_RNDU);
  BigFloat logB = b.log(MPFR_RNDU);
  BigFloat Dv = BigFloat::from_double(static_cast<double>(D));
  // inner = 1250 D^11 B^(5D-1)
  BigFloat inner = BigFloat::from_double(1250.0)
                       .mul(Dv.pow_si(11, MPFR_RNDU), MPFR_RNDU)
                       .mul(b.pow_si(5 * D - 1, MPFR_RNDU), MPFR_RNDU);
  BigFloat log_inner = inner.log(MPFR_RNDU);
  BigFloat two36 = BigFloat::from_double(1.0);
  mpfr_set_ui_2exp(two36.raw(), 1, 36, MPFR_RNDN);
  BigFloat broot = b.pow(BigFloat::from_double(1.0 / static_cast<double>(D)), MPFR_RNDU);
  // B^(1/D) rounded up: use exp(log B / D) with directed steps instead
  {
    BigFloat e = logB.div(BigFloat::from_double(static_cast<double>(D)), MPFR_RNDU);
    mpfr_exp(broot.raw(), e.raw(), MPFR_RNDU);
  }
  return two36.mul(Dv.pow_si(5, MPFR_RNDU), MPFR_RNDU)
      .mul(log_inner.pow_si(3, MPFR_RNDU), MPFR_RNDU)
      .mul(logB.pow_si(2, MPFR_RNDU), MPFR_RNDU)
      .mul(broot, MPFR_RNDU);
}

Int brute_lattice_count(const WalkowiakInstance& inst, const Int& B) {
  if (B < 0) throw std::invalid_argument("negative lattice bound");
  if (!B.fits_slong_p()) throw std::invalid_argument("lattice range too large");
  long N = B.get_si();
  Int count = 0;
  for (long t = -N; t <= N; ++t) {
    UniPoly fiber = inst.F.eval_T(Rat(t));
    if (fiber.degree() < 1) continue;
    for (const Int& y : integer_roots_monic(fiber))
      if (abs(y) <= B) ++count;
  }
  return count;
}

ScalingResult scaling_experiment(const WalkowiakInstance& inst,
                                 const std::vector<Int>& grid) {
  if (grid.size() < 3) throw std::invalid_argument("scaling grid needs >= 3 points");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i]))
      throw std::invalid_argument("scaling grid must be strictly increasing");
  double span = std::log10(mpz_get_d(grid.back().get_mpz_t())) -
                std::log10(mpz_get_d(grid.front().get_mpz_t()));
  if (span < 2.0) throw std::invalid_argument("scaling grid must span >= 2 decades");

  ScalingResult res;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const Int& B : grid) {
    Int z = brute_Z(inst, B, 1).count;
    if (z <= 0) throw std::invalid_argument("scaling grid hit a zero count");
    res.counts.emplace_back(B, z);
    double x = std::log(mpz_get_d(B.get_mpz_t()));
    double y = std::log(mpz_get_d(z.get_mpz_t()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(grid.size());
  res.theta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  res.pass = res.theta <= 1.0 / static_cast<double>(inst.n) + 0.1;
  return res;
}

}  // namespace malle
