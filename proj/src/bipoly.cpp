#include "malle/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace malle {

BiPoly::BiPoly(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  size_t width = 0;
  for (auto& r : rows_) width = std::max(width, r.size());
  for (auto& r : rows_) r.resize(width, Int(0));
  trim();
}

BiPoly BiPoly::from_terms(const std::vector<std::tuple<long, int, int>>& terms) {
  int mi = 0, mj = 0;
  for (auto& [c, i, j] : terms) {
    mi = std::max(mi, i);
    mj = std::max(mj, j);
  }
  std::vector<std::vector<Int>> rows(static_cast<size_t>(mi) + 1,
                                     std::vector<Int>(static_cast<size_t>(mj) + 1, Int(0)));
  for (auto& [c, i, j] : terms) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] += c;
  return BiPoly(std::move(rows));
}

void BiPoly::trim() {
  auto row_zero = [](const std::vector<Int>& r) {
    for (const auto& c : r)
      if (c != 0) return false;
    return true;
  };
  while (!rows_.empty() && row_zero(rows_.back())) rows_.pop_back();
  degY_ = -1;
  for (const auto& r : rows_)
    for (size_t j = r.size(); j-- > 0;)
      if (r[j] != 0) {
        degY_ = std::max(degY_, static_cast<int>(j));
        break;
      }
  if (degY_ < 0) {
    rows_.clear();
    return;
  }
  for (auto& r : rows_) r.resize(static_cast<size_t>(degY_) + 1);
}

int BiPoly::total_degree() const {
  int d = -1;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
  return d;
}

Int BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(rows_.size()) ||
      j >= static_cast<int>(rows_.empty() ? 0 : rows_[0].size()))
    return 0;
  return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Int BiPoly::content() const {
  Int g = 0;
  for (const auto& r : rows_)
    for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int BiPoly::height() const {
  Int h = 0;
  for (const auto& r : rows_)
    for (const auto& c : r) {
      Int a = abs(c);
      if (a > h) h = a;
    }
  return h;
}

bool BiPoly::is_monic_in_y() const {
  if (is_zero() || degY_ < 0) return false;
  UniPoly lead = leading_y_coeff();
  return lead.degree() == 0 && lead.coeff(0) == 1;
}

UniPoly BiPoly::coeff_of_y(int j) const {
  std::vector<Rat> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_)
    c.emplace_back(j >= 0 && static_cast<size_t>(j) < r.size() ? Rat(r[static_cast<size_t>(j)])
                                                               : Rat(0));
  return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_T(const Rat& t0) const {
  std::vector<Rat> c(static_cast<size_t>(degY_) + 1, Rat(0));
  for (int j = 0; j <= degY_; ++j) {
    Rat acc = 0;
    for (size_t i = rows_.size(); i-- > 0;)
      acc = acc * t0 + Rat(rows_[i][static_cast<size_t>(j)]);
    c[static_cast<size_t>(j)] = acc;
  }
  return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_Y(const Rat& y0) const {
  std::vector<Rat> c(rows_.size(), Rat(0));
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rat acc = 0;
    for (size_t j = rows_[i].size(); j-- > 0;) acc = acc * y0 + Rat(rows_[i][j]);
    c[i] = acc;
  }
  return UniPoly(std::move(c));
}

Int BiPoly::eval(const Int& t0, const Int& y0) const {
  Int acc = 0;
  for (size_t i = rows_.size(); i-- > 0;) {
    Int row = 0;
    for (size_t j = rows_[i].size(); j-- > 0;) row = row * y0 + rows_[i][j];
    acc = acc * t0 + row;
  }
  return acc;
}

BiPoly BiPoly::transpose() const {
  if (is_zero()) return BiPoly();
  std::vector<std::vector<Int>> rows(static_cast<size_t>(degY_) + 1,
                                     std::vector<Int>(rows_.size(), Int(0)));
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) rows[j][i] = rows_[i][j];
  return BiPoly(std::move(rows));
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = rows_.size(); i-- > 0;)
    for (size_t j = rows_[i].size(); j-- > 0;) {
      const Int& c = rows_[i][j];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      Int a = abs(c);
      bool unit = (a == 1) && (i + j > 0);
      if (!unit) os << a.get_str();
      if (i > 0) os << "T" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) os << "Y" << (j > 1 ? "^" + std::to_string(j) : "");
      first = false;
    }
  return os.str();
}

namespace {

// res_Y of the univariate specializations at enough points, interpolated.
UniPoly resultant_y_impl(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant of zero polynomial");
  int na = a.deg_Y(), nb = b.deg_Y();
  if (na < 0 || nb < 0) throw std::invalid_argument("resultant needs Y-degree >= 0");
  long bound = static_cast<long>(a.deg_T()) * nb + static_cast<long>(b.deg_T()) * na;
  UniPoly lca = a.leading_y_coeff(), lcb = b.leading_y_coeff();

  std::vector<Rat> xs, ys;
  long t = 0;
  while (static_cast<long>(xs.size()) < bound + 1) {
    Rat tq(t);
    // Skip points where either leading Y-coefficient degenerates; there the
    // specialized resultant differs from the specialization of the resultant.
    if (lca.eval(tq) != 0 && lcb.eval(tq) != 0) {
      xs.push_back(tq);
      ys.push_back(resultant(a.eval_T(tq), b.eval_T(tq)));
    }
    t = t <= 0 ? -t + 1 : -t;  // 0, 1, -1, 2, -2, ...
  }

  // Lagrange interpolation, exact.
  UniPoly result = UniPoly::zero();
  for (size_t k = 0; k < xs.size(); ++k) {
    UniPoly basis = UniPoly::constant(1);
    Rat denom = 1;
    for (size_t l = 0; l < xs.size(); ++l) {
      if (l == k) continue;
      basis = basis * UniPoly({-xs[l], Rat(1)});
      denom *= xs[k] - xs[l];
    }
    result = result + basis.scaled(ys[k] / denom);
  }
  return result;
}

}  // namespace

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) { return resultant_y_impl(a, b); }

UniPoly resultant_t(const BiPoly& a, const BiPoly& b) {
  return resultant_y_impl(a.transpose(), b.transpose());
}

UniPoly discriminant_y(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("discriminant of zero polynomial");
  if (p.deg_Y() < 1) throw std::invalid_argument("discriminant needs deg_Y >= 1");
  int n = p.deg_Y();
  // dP/dY
  std::vector<std::vector<Int>> rows(static_cast<size_t>(p.deg_T()) + 1,
                                     std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i <= p.deg_T(); ++i)
    for (int j = 1; j <= n; ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = p.coeff(i, j) * j;
  BiPoly dp(std::move(rows));
  UniPoly res = resultant_y(p, dp);
  UniPoly q, r;
  divmod(res, p.leading_y_coeff(), q, r);
  if (!r.is_zero())
    throw std::logic_error("discriminant: resultant not divisible by lc");
  bool flip = (static_cast<long>(n) * (n - 1) / 2) % 2 != 0;
  return flip ? -q : q;
}

BiPoly substitute_shift(const BiPoly& f, long e) {
  if (e < 1) throw std::invalid_argument("substitute_shift needs E >= 1");
  if (f.is_zero()) return f;
  int m = f.deg_T(), n = f.deg_Y();
  // binomial table up to n
  std::vector<std::vector<Int>> binom(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    binom[static_cast<size_t>(j)].resize(static_cast<size_t>(j) + 1);
    for (int k = 0; k <= j; ++k) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
      binom[static_cast<size_t>(j)][static_cast<size_t>(k)] = b;
    }
  }
  size_t max_t = static_cast<size_t>(m) + static_cast<size_t>(e) * static_cast<size_t>(n);
  std::vector<std::vector<Int>> rows(max_t + 1, std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      Int c = f.coeff(i, j);
      if (c == 0) continue;
      // c T^i (T^E + Y)^j = sum_k c C(j,k) T^(i+E(j-k)) Y^k
      for (int k = 0; k <= j; ++k) {
        size_t ti = static_cast<size_t>(i) + static_cast<size_t>(e) * static_cast<size_t>(j - k);
        rows[ti][static_cast<size_t>(k)] += c * binom[static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
    }
  return BiPoly(std::move(rows));
}

}  // namespace malle
