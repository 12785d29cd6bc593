#include "malle/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace malle {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rat& c) {
  return UniPoly(std::vector<Rat>{c});
}

UniPoly UniPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool UniPoly::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

Int UniPoly::eval_int(const Int& t) const {
  Int r = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    r *= t;
    if (c_[i].get_den() != 1)
      throw std::invalid_argument("eval_int on non-integral polynomial");
    r += c_[i].get_num();
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Rat> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(out));
}

Rat UniPoly::height() const {
  Rat h = 0;
  for (const auto& c : c_) {
    Rat a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

UniPoly UniPoly::scaled(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  Int den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int content = 0;
  std::vector<Rat> scaled_c(c_);
  for (auto& c : scaled_c) {
    c *= Rat(den_lcm);
    c.canonicalize();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  }
  if (content == 0) content = 1;
  std::vector<Rat> out;
  out.reserve(scaled_c.size());
  for (auto& c : scaled_c) out.push_back(c / Rat(content));
  UniPoly r(std::move(out));
  if (r.lc() < 0) r = -r;
  return r;
}

ModPoly UniPoly::reduce_mod(uint64_t p) const {
  std::vector<uint64_t> c(c_.size(), 0);
  Int pz(static_cast<unsigned long>(p));
  for (size_t i = 0; i < c_.size(); ++i) {
    Int num = c_[i].get_num() % pz, den = c_[i].get_den() % pz, inv;
    if (num < 0) num += pz;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw std::invalid_argument("reduce_mod: denominator not invertible");
    c[i] = static_cast<uint64_t>(Int(num * inv % pz).get_ui());
  }
  return ModPoly(p, std::move(c));
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("UniPoly division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) {
    q = UniPoly::zero();
    r = a;
    return;
  }
  std::vector<Rat> quot(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  for (int d = a.degree(); d >= db; --d) {
    Rat top = rem[static_cast<size_t>(d)];
    if (top == 0) continue;
    Rat f = top / b.lc();
    quot[static_cast<size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(d - db + i)] -= f * b.coeff(static_cast<size_t>(i));
  }
  q = UniPoly(std::move(quot));
  r = UniPoly(std::move(rem));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.lc());
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  // res(a, b) with the PRS recurrence; exact over Q.
  if (a.is_zero() || b.is_zero()) return Rat(0);
  if (a.degree() == 0) {
    Rat out = 1;
    for (int i = 0; i < b.degree(); ++i) out *= a.lc();
    return out;
  }
  if (b.degree() == 0) {
    Rat out = 1;
    for (int i = 0; i < a.degree(); ++i) out *= b.lc();
    return out;
  }
  if (a.degree() < b.degree()) {
    Rat sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    return sign * resultant(b, a);
  }
  UniPoly q, r;
  divmod(a, b, q, r);
  if (r.is_zero()) return Rat(0);
  Rat lcb_pow = 1;
  for (int i = 0; i < a.degree() - r.degree(); ++i) lcb_pow *= b.lc();
  Rat sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
  return sign * lcb_pow * resultant(b, r);
}

Rat discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant of constant");
  Rat res = resultant(f, f.derivative());
  Rat sign = (f.degree() * (f.degree() - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * res / f.lc();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  if (f.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(f, f.derivative());
  UniPoly q, r;
  divmod(f, g, q, r);
  return q.primitive_integer();
}

namespace {

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Cauchy bound: all real roots of f lie strictly inside [-M, M].
Rat cauchy_bound(const UniPoly& f) {
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rat a = abs(f.coeff(static_cast<size_t>(i)) / f.lc());
    if (a > m) m = a;
  }
  return m + 1;
}

// Sturm chain of a squarefree f.
std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sturm_variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& g : chain) {
    int s = sign_of(g.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of roots of f in (a, b].
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Isolating intervals (lo, hi] each holding exactly one real root of the
// squarefree polynomial f; f(lo) != 0 is guaranteed.
void isolate_roots(const UniPoly& f, std::vector<std::pair<Rat, Rat>>& out) {
  out.clear();
  if (f.degree() <= 0) return;
  auto chain = sturm_chain(f);
  Rat M = cauchy_bound(f);
  std::vector<std::pair<Rat, Rat>> stack{{-M, M}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sturm_count(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) / 2;
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<Int> integer_roots_monic(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("integer_roots_monic of zero");
  if (!f.is_integral() || !f.is_monic())
    throw std::invalid_argument("integer_roots_monic needs monic integral input");
  UniPoly g = squarefree_part(f);  // monic integral again (Gauss)
  auto chain = sturm_chain(g);
  std::vector<std::pair<Rat, Rat>> intervals;
  isolate_roots(g, intervals);
  std::vector<Int> roots;
  for (auto& [lo, hi] : intervals) {
    // Shrink by Sturm-count bisection until at most two integer candidates
    // remain, then test those exactly.
    Rat a = lo, b = hi;
    while (b - a > Rat(1, 2)) {
      Rat mid = (a + b) / 2;
      if (sturm_count(chain, a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    Int fa, fb;
    mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(fb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    for (Int cand = fa; cand <= fb + 1; ++cand)
      if (g.eval_int(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of zero");
  if (f.degree() == 0) return {};
  UniPoly g = f.primitive_integer();
  // z = lc * T turns g into a monic integer polynomial in z.
  Int an = g.lc().get_num();
  int n = g.degree();
  std::vector<Rat> monic_coeffs(static_cast<size_t>(n) + 1, Rat(0));
  // ghat(z) = an^(n-1) g(z/an): coefficient of z^i is a_i * an^(n-1-i).
  monic_coeffs[static_cast<size_t>(n)] = 1;
  for (int i = 0; i < n; ++i) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
    monic_coeffs[static_cast<size_t>(i)] = Rat(g.coeff(static_cast<size_t>(i)).get_num() * pw);
  }
  std::vector<Rat> out;
  for (const Int& z : integer_roots_monic(UniPoly(std::move(monic_coeffs)))) {
    Rat root(z, an);
    root.canonicalize();
    if (f.eval(root) == 0) out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace malle
