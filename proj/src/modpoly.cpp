#include "malle/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace malle {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  // p prime, a != 0 mod p
  uint64_t e = p - 2, r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t ModPoly::eval(uint64_t t) const {
  uint64_t r = 0;
  t %= p_;
  for (size_t i = c_.size(); i-- > 0;) r = (mulmod(r, t, p_) + c_[i]) % p_;
  return r;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  std::vector<uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return ModPoly(a.p_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  std::vector<uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = submod(a.coeff(i), b.coeff(i), a.p_);
  return ModPoly(a.p_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p_);
  std::vector<uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return ModPoly(a.p_, std::move(c));
}

bool operator==(const ModPoly& a, const ModPoly& b) {
  return a.p_ == b.p_ && a.c_ == b.c_;
}

ModPoly ModPoly::scaled(uint64_t c) const {
  std::vector<uint64_t> out(c_);
  for (auto& x : out) x = mulmod(x, c % p_, p_);
  return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scaled(invmod(lc(), p_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return zero(p_);
  std::vector<uint64_t> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulmod(c_[i], i % p_, p_);
  return ModPoly(p_, std::move(out));
}

bool ModPoly::operator<(const ModPoly& b) const {
  if (c_.size() != b.c_.size()) return c_.size() < b.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != b.c_[i]) return c_[i] < b.c_[i];
  return false;
}

void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("ModPoly division by zero");
  uint64_t p = a.p();
  std::vector<uint64_t> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) {
    q = ModPoly::zero(p);
    r = a;
    return;
  }
  std::vector<uint64_t> quot(a.degree() - db + 1, 0);
  uint64_t binv = invmod(b.lc(), p);
  for (int d = a.degree(); d >= db; --d) {
    uint64_t top = rem[static_cast<size_t>(d)];
    if (top == 0) continue;
    uint64_t f = mulmod(top, binv, p);
    quot[static_cast<size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i) {
      size_t idx = static_cast<size_t>(d - db + i);
      rem[idx] = submod(rem[idx], mulmod(f, b.coeff(static_cast<size_t>(i)), p), p);
    }
  }
  q = ModPoly(p, std::move(quot));
  r = ModPoly(p, std::move(rem));
}

ModPoly mod(const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divmod(a, b, q, r);
  return r;
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = mod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
  ModPoly result = ModPoly::constant(base.p(), 1);
  ModPoly b = mod(base, m);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mod(result * b, m);
    b = mod(b * b, m);
    k >>= 1;
  }
  return result;
}

std::vector<int> ModPFactorization::type() const {
  std::vector<int> t;
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) t.push_back(f.degree());
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

// f monic with f' == 0, i.e. f = g(Y^p).  Over F_p the coefficient p-th
// roots are the coefficients themselves (Frobenius fixes F_p).
ModPoly pth_root(const ModPoly& f) {
  uint64_t p = f.p();
  std::vector<uint64_t> out(static_cast<size_t>(f.degree() / static_cast<int>(p)) + 1, 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i * static_cast<size_t>(p));
  return ModPoly(p, std::move(out));
}

// Squarefree decomposition of a monic f: list of (squarefree part, exponent).
void squarefree_decompose(const ModPoly& f, int outer_mult,
                          std::vector<std::pair<ModPoly, int>>& out) {
  uint64_t p = f.p();
  if (f.degree() <= 0) return;
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(p), out);
    return;
  }
  ModPoly c = gcd(f, d);
  ModPoly w;
  {
    ModPoly q, r;
    divmod(f, c, q, r);
    w = q;  // product of squarefree factors, each once
  }
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly q, r;
    divmod(w, y, q, r);
    if (q.degree() > 0) out.emplace_back(q.monic(), i * outer_mult);
    divmod(c, y, q, r);
    c = q;
    w = y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(c, outer_mult * static_cast<int>(p), out);
}

// Distinct-degree splitting of a monic squarefree f: (product of degree-d
// irreducibles, d) pairs.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
  uint64_t p = f.p();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f;
  ModPoly xq = mod(ModPoly::x(p), rest);  // x^(p^d) mod rest, updated per d
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (rest.degree() < 2 * d) {  // what remains is irreducible
      out.emplace_back(rest, rest.degree());
      break;
    }
    xq = powmod(xq, Int(static_cast<unsigned long>(p)), rest);
    ModPoly g = gcd(xq - ModPoly::x(p), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      ModPoly q, r;
      divmod(rest, g, q, r);
      rest = q.monic();
      xq = mod(xq, rest);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree d.
void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  uint64_t p = f.p();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  ModPoly splitter;
  while (true) {
    std::vector<uint64_t> rc(static_cast<size_t>(f.degree()), 0);
    for (auto& c : rc) c = rng() % p;
    ModPoly h(p, std::move(rc));
    if (h.degree() < 1) continue;
    ModPoly g;
    if (p == 2) {
      // trace map: h + h^2 + h^4 + ... + h^(2^(d-1))
      ModPoly tr = mod(h, f), pw = tr;
      for (int i = 1; i < d; ++i) {
        pw = mod(pw * pw, f);
        tr = tr + pw;
      }
      g = gcd(tr, f);
    } else {
      Int e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      ModPoly hm = powmod(h, e, f) - ModPoly::constant(p, 1);
      g = gcd(hm, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      ModPoly q, r;
      divmod(f, g, q, r);
      equal_degree(q.monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

ModPFactorization factor_mod_p(const ModPoly& f, uint64_t seed) {
  if (!is_prime(static_cast<long>(f.p())))
    throw std::invalid_argument("factor_mod_p: modulus is not prime");
  if (f.is_zero())
    throw std::invalid_argument("factor_mod_p: zero polynomial");

  ModPFactorization out;
  out.p = f.p();
  out.input = f;
  out.unit = f.lc();
  if (f.degree() == 0) return out;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<ModPoly, int>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<ModPoly> irr;
      equal_degree(prod, d, rng, irr);
      for (ModPoly& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace malle
