/* Thin RAII wrapper over MPFR for the bound evaluators: 192-bit mantissa by
   default, with the rounding direction explicit at every operation so upper
   bounds can be rounded up and lower bounds down. */

#pragma once

#include <string>

#include <mpfr.h>

#include "malle/intmath.hpp"

namespace malle {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrec = 192;

  BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_double(double d, mpfr_prec_t prec = kPrec);
  static BigFloat from_int(const Int& z, mpfr_rnd_t rnd = MPFR_RNDN, mpfr_prec_t prec = kPrec);
  static BigFloat e_to_e(mpfr_rnd_t rnd, mpfr_prec_t prec = kPrec);  // e^e

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  // Smallest integer >= value (value must be a finite upper-rounded bound).
  Int ceil_to_int() const;
  Int floor_to_int() const;

  BigFloat add(const BigFloat& o, mpfr_rnd_t rnd) const;
  BigFloat sub(const BigFloat& o, mpfr_rnd_t rnd) const;
  BigFloat mul(const BigFloat& o, mpfr_rnd_t rnd) const;
  BigFloat div(const BigFloat& o, mpfr_rnd_t rnd) const;
  BigFloat log(mpfr_rnd_t rnd) const;
  BigFloat pow(const BigFloat& e, mpfr_rnd_t rnd) const;
  BigFloat pow_si(long e, mpfr_rnd_t rnd) const;

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

 private:
  mpfr_t v_;
};

}  // namespace malle
