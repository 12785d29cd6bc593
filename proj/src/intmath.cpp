#include "malle/intmath.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace malle {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<uint8_t> sieve(static_cast<size_t>(n) + 1, 1);
  sieve[0] = sieve[1] = 0;
  for (long i = 2; i * i <= n; ++i)
    if (sieve[static_cast<size_t>(i)])
      for (long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = 0;
  for (long i = 2; i <= n; ++i)
    if (sieve[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  Int z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;  // exact for long range
}

long next_prime_after(long n) {
  Int z(n), r;
  mpz_nextprime(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

long prime_pi(double x) {
  if (x < 2) return 0;
  return static_cast<long>(primes_up_to(static_cast<long>(std::floor(x))).size());
}

Int primorial(double x) {
  Int prod = 1;
  if (x < 2) return prod;
  for (long p : primes_up_to(static_cast<long>(std::floor(x)))) prod *= p;
  return prod;
}

Int prime_product(const std::vector<long>& s) {
  Int prod = 1;
  for (long p : s) prod *= p;
  return prod;
}

int legendre(const Int& a, long p) {
  Int pz(p);
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

int legendre_ul(uint64_t a_mod_p, uint64_t p) {
  if (a_mod_p == 0) return 0;
  // Euler criterion with 128-bit modular exponentiation.
  uint64_t e = (p - 1) / 2, base = a_mod_p % p, r = 1;
  while (e) {
    if (e & 1) r = static_cast<uint64_t>((__uint128_t)r * base % p);
    base = static_cast<uint64_t>((__uint128_t)base * base % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

long valuation(const Int& n, long p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Int m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

namespace {

// Primes up to 10^6, built once; enough to kernel any |n| < 10^18 via the
// cube-root cutoff below.
const std::vector<long>& kernel_primes() {
  static std::vector<long> ps = primes_up_to(1000000);
  return ps;
}

uint64_t kernel_u64(uint64_t n) {
  // Trial-divide by p while p^3 <= n; the remaining cofactor has at most two
  // prime factors, so it is 1, q, q^2 or q*r and its kernel is immediate.
  uint64_t k = 1;
  for (long lp : kernel_primes()) {
    uint64_t p = static_cast<uint64_t>(lp);
    if (p * p * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e & 1) k *= p;
    }
  }
  if (n > 1) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (__uint128_t)r * r > n) --r;
    while ((__uint128_t)(r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) k *= n;  // q or q*r: squarefree
  }
  return k;
}

}  // namespace

Int squarefree_kernel(const Int& n) {
  if (n == 0) return 0;
  Int m = abs(n);
  if (m.fits_ulong_p()) {
    Int k(static_cast<unsigned long>(kernel_u64(m.get_ui())));
    return n < 0 ? Int(-k) : k;
  }
  Int k = 1;
  for (long lp : kernel_primes()) {
    Int p(lp), p3 = p * p * p;
    if (p3 > m) break;
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      long e = 0;
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++e;
      }
      if (e & 1) k *= p;
    }
    if (m.fits_ulong_p()) {
      k *= static_cast<unsigned long>(kernel_u64(m.get_ui()));
      return n < 0 ? Int(-k) : k;
    }
  }
  if (m > 1) {
    if (!mpz_perfect_square_p(m.get_mpz_t())) k *= m;
  }
  return n < 0 ? Int(-k) : k;
}

Int quadratic_field_discriminant(const Int& n) {
  Int k = squarefree_kernel(n);
  if (k == 0) throw std::invalid_argument("discriminant of square class of 0");
  Int kmod4 = ((k % 4) + 4) % 4;
  return kmod4 == 1 ? k : Int(4 * k);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool exact_root(const Int& n, unsigned long e, Int& out) {
  if (e == 0) throw std::invalid_argument("0th root");
  if (n < 0 && e % 2 == 0) return false;
  Int r;
  int exactf = mpz_root(r.get_mpz_t(), n.get_mpz_t(), e);
  if (!exactf) return false;
  out = r;
  return true;
}

std::vector<Int> crt_basis(const std::vector<Int>& moduli, Int& M_out) {
  Int M = 1;
  for (const Int& m : moduli) M *= m;
  std::vector<Int> basis;
  basis.reserve(moduli.size());
  for (const Int& m : moduli) {
    Int rest = M / m, inv;
    if (mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::invalid_argument("crt_basis: moduli not coprime");
    basis.push_back(rest * inv % M);
  }
  M_out = M;
  return basis;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("MALLE_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace malle
