#include "cmint/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cmint {

namespace {
mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

BigReal::BigReal(mpfr_prec_t bits, long value) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(mpfr_prec_t bits, const std::string& decimal) {
  BigReal r(bits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
  return r;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, v_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string BigReal::to_sci_string(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

#define CMINT_BINARY_OP(op, fn)                              \
  BigReal operator op(const BigReal& a, const BigReal& b) {  \
    BigReal r(max_prec(a, b));                               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
    return r;                                                \
  }
CMINT_BINARY_OP(+, mpfr_add)
CMINT_BINARY_OP(-, mpfr_sub)
CMINT_BINARY_OP(*, mpfr_mul)
CMINT_BINARY_OP(/, mpfr_div)
#undef CMINT_BINARY_OP

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& b) {
  mpfr_add(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& b) {
  mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

#define CMINT_UNARY_FN(name, fn)           \
  BigReal name(const BigReal& x) {         \
    BigReal r(x.precision());              \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }
CMINT_UNARY_FN(abs, mpfr_abs)
CMINT_UNARY_FN(sqrt, mpfr_sqrt)
CMINT_UNARY_FN(exp, mpfr_exp)
CMINT_UNARY_FN(log, mpfr_log)
CMINT_UNARY_FN(cos, mpfr_cos)
CMINT_UNARY_FN(sin, mpfr_sin)
#undef CMINT_UNARY_FN

BigReal log_of(mpfr_prec_t bits, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("log_of: argument must be positive");
  BigReal x(bits, static_cast<long>(n));
  return log(x);
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
BigComplex operator*(const BigComplex& a, long s) { return {a.re * s, a.im * s}; }

BigReal abs(const BigComplex& z) {
  BigReal r(z.re.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

}  // namespace cmint
