/* Exact integer utilities shared by the whole library: prime sieves,
   Legendre symbols, p-adic valuations, squarefree kernels and CRT lifts.
   Everything here is arbitrary-precision (GMP) with uint64 fast paths. */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace malle {

using Int = mpz_class;
using Rat = mpq_class;

// Primes up to n inclusive, ascending.
std::vector<long> primes_up_to(long n);

bool is_prime(long n);

// Smallest prime strictly greater than n.
long next_prime_after(long n);

// Number of primes <= x.
long prime_pi(double x);

// Product of all primes <= x (the classical primorial Pi(x)).
Int primorial(double x);

// Product of a finite prime set; empty product = 1.
Int prime_product(const std::vector<long>& s);

// Legendre symbol (a/p), p an odd prime: -1, 0 or +1.
int legendre(const Int& a, long p);
int legendre_ul(uint64_t a_mod_p, uint64_t p);

// v_p(n) for n != 0; throws for n == 0.
long valuation(const Int& n, long p);

// Signed squarefree kernel: the squarefree integer k with n = k*m^2,
// sign(k) = sign(n). kernel(0) = 0.
Int squarefree_kernel(const Int& n);

// Discriminant of the quadratic field Q(sqrt(n)): k if k = 1 mod 4, else 4k,
// with k the squarefree kernel.  Requires k != 0, 1 handled by caller.
Int quadratic_field_discriminant(const Int& n);

// Exact perfect-power tests.
bool is_perfect_square(const Int& n);
// y with y^e = n if one exists (e >= 1, sign-aware), else nullopt semantics
// via the bool return.
bool exact_root(const Int& n, unsigned long e, Int& out);

// CRT basis for pairwise coprime moduli m[i]: basis[i] = M/m[i] * inv
// (mod M), so that sum r[i]*basis[i] mod M solves the system.
std::vector<Int> crt_basis(const std::vector<Int>& moduli, Int& M_out);

// Thread count used by the parallel loops: MALLE_THREADS env if set,
// otherwise hardware concurrency (at least 1).
unsigned worker_threads();

}  // namespace malle
