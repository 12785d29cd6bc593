#include "malle/twist2.hpp"

#include <stdexcept>

namespace malle {

QuadTwist QuadTwist::make(const UniPoly& f, const Int& d) {
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("twist needs a nonconstant f");
  if (!f.is_integral()) throw std::invalid_argument("twist needs integral f");
  if (d == 0 || squarefree_kernel(d) != d)
    throw std::invalid_argument("twist needs squarefree d != 0");
  UniPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) throw std::invalid_argument("twist needs squarefree f");
  return QuadTwist{f, d};
}

bool verify_global(const QuadTwist& twist, const Int& t0) {
  Int v = twist.f.eval_int(t0);
  if (v == 0) throw std::invalid_argument("t0 is a branch point of the twist");
  // Route 1: square-class comparison.
  bool route_kernel = squarefree_kernel(v) == twist.d;
  // Route 2: direct rational point search, v/d = (a/b)^2 via exact integer
  // square roots of the canonicalized numerator and denominator.
  Rat q(v, twist.d);
  q.canonicalize();
  bool route_point = q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
  if (route_kernel != route_point)
    throw std::logic_error("twisting equivalence violated at t0 = " + t0.get_str());
  return route_kernel;
}

bool twist_prime_ok(const QuadTwist& twist, long p) {
  if (p == 2 || !is_prime(p)) return false;
  if (mpz_divisible_ui_p(twist.d.get_mpz_t(), static_cast<unsigned long>(p))) return false;
  UniPoly g = twist.f.primitive_integer();
  if (mpz_divisible_ui_p(g.lc().get_num_mpz_t(), static_cast<unsigned long>(p))) return false;
  ModPoly fp = g.reduce_mod(static_cast<uint64_t>(p));
  if (fp.degree() != g.degree()) return false;
  return gcd(fp, fp.derivative()).degree() == 0;  // squarefree mod p
}

namespace {

// Quadratic-residue table for F_p: squares[v] = true iff v is a nonzero square.
std::vector<uint8_t> square_table(uint64_t p) {
  std::vector<uint8_t> sq(p, 0);
  for (uint64_t y = 1; y < p; ++y) sq[static_cast<size_t>((__uint128_t)y * y % p)] = 1;
  return sq;
}

}  // namespace

bool verify_local(const QuadTwist& twist, long p) {
  if (!twist_prime_ok(twist, p))
    throw std::invalid_argument("bad prime for the twist: " + std::to_string(p));
  uint64_t up = static_cast<uint64_t>(p);
  ModPoly fp = twist.f.reduce_mod(up);
  uint64_t dmod = static_cast<uint64_t>(Int(((twist.d % p) + p) % p).get_ui());
  std::vector<uint8_t> sq = square_table(up);
  int chi_d = legendre(twist.d, p);
  bool all_ok = true;
  for (uint64_t t = 0; t < up; ++t) {
    uint64_t v = fp.eval(t);
    if (v == 0) continue;
    // Route 1: character comparison.
    bool chars_match = legendre_ul(v, up) == chi_d;
    // Route 2: point existence for d y^2 = v via the square table: a
    // solution y exists iff d*v is a nonzero square (z = d y).
    uint64_t dv = static_cast<uint64_t>((__uint128_t)dmod * v % up);
    bool point_exists = sq[static_cast<size_t>(dv)] != 0;
    if (chars_match != point_exists) all_ok = false;
  }
  return all_ok;
}

std::vector<long> split_residues(const QuadTwist& twist, long p) {
  if (!twist_prime_ok(twist, p))
    throw std::invalid_argument("bad prime for the twist: " + std::to_string(p));
  uint64_t up = static_cast<uint64_t>(p);
  ModPoly fp = twist.f.reduce_mod(up);
  int chi_d = legendre(twist.d, p);
  std::vector<long> out;
  for (uint64_t t = 0; t < up; ++t) {
    uint64_t v = fp.eval(t);
    if (v != 0 && legendre_ul(v, up) == chi_d) out.push_back(static_cast<long>(t));
  }
  return out;
}

LangWeilTwistReport lang_weil_on_twist(const QuadTwist& twist, long p) {
  if (!twist_prime_ok(twist, p))
    throw std::invalid_argument("bad prime for the twist: " + std::to_string(p));
  LangWeilTwistReport rep;
  rep.p = p;
  rep.genus = (squarefree_part(twist.f).degree() - 1) / 2;
  uint64_t up = static_cast<uint64_t>(p);
  ModPoly fp = twist.f.reduce_mod(up);
  std::vector<uint8_t> sq = square_table(up);
  uint64_t dmod = static_cast<uint64_t>(Int(((twist.d % p) + p) % p).get_ui());
  long affine = 0;
  for (uint64_t t = 0; t < up; ++t) {
    uint64_t v = fp.eval(t);
    // solutions y of d y^2 = v: substitute z = d y; z^2 = d v
    uint64_t dv = static_cast<uint64_t>((__uint128_t)dmod * v % up);
    if (v == 0)
      affine += 1;  // y = 0
    else if (sq[static_cast<size_t>(dv)])
      affine += 2;
  }
  rep.affine_points = affine;
  if (twist.f.degree() % 2 == 1) {
    rep.points_at_infinity = 1;
  } else {
    Int lead = twist.f.lc().get_num() * twist.d;
    rep.points_at_infinity = legendre(lead, p) == 1 ? 2 : 0;
  }
  rep.total = rep.affine_points + rep.points_at_infinity;
  // |N - (p+1)| <= 2g sqrt(p), squared to stay exact.
  long diff = rep.total - (p + 1);
  rep.within_bounds =
      Int(diff) * diff <= Int(4) * rep.genus * rep.genus * p;
  return rep;
}

}  // namespace malle
