#include "malle/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace malle {

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_int(const Int& z, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::e_to_e(mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat one(prec), e(prec), r(prec);
  mpfr_set_ui(one.v_, 1, MPFR_RNDN);
  mpfr_exp(e.v_, one.v_, rnd);
  mpfr_exp(r.v_, e.v_, rnd);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return buf;
}

Int BigFloat::ceil_to_int() const {
  mpfr_t c;
  mpfr_init2(c, mpfr_get_prec(v_));
  mpfr_ceil(c, v_);
  Int out;
  mpfr_get_z(out.get_mpz_t(), c, MPFR_RNDN);  // exact: c is an integer
  mpfr_clear(c);
  return out;
}

Int BigFloat::floor_to_int() const {
  mpfr_t c;
  mpfr_init2(c, mpfr_get_prec(v_));
  mpfr_floor(c, v_);
  Int out;
  mpfr_get_z(out.get_mpz_t(), c, MPFR_RNDN);
  mpfr_clear(c);
  return out;
}

#define MALLE_BF_BINOP(name, fn)                                   \
  BigFloat BigFloat::name(const BigFloat& o, mpfr_rnd_t rnd) const { \
    BigFloat r(mpfr_get_prec(v_));                                 \
    fn(r.v_, v_, o.v_, rnd);                                       \
    return r;                                                      \
  }

MALLE_BF_BINOP(add, mpfr_add)
MALLE_BF_BINOP(sub, mpfr_sub)
MALLE_BF_BINOP(mul, mpfr_mul)
MALLE_BF_BINOP(div, mpfr_div)

#undef MALLE_BF_BINOP

BigFloat BigFloat::log(mpfr_rnd_t rnd) const {
  BigFloat r(mpfr_get_prec(v_));
  mpfr_log(r.v_, v_, rnd);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& e, mpfr_rnd_t rnd) const {
  BigFloat r(mpfr_get_prec(v_));
  mpfr_pow(r.v_, v_, e.v_, rnd);
  return r;
}

BigFloat BigFloat::pow_si(long e, mpfr_rnd_t rnd) const {
  BigFloat r(mpfr_get_prec(v_));
  mpfr_pow_si(r.v_, v_, e, rnd);
  return r;
}

}  // namespace malle
