#pragma once

// Minimal RAII wrapper over an MPFR floating-point value. Each value carries
// its own precision, so computations at different precisions can run on
// separate threads without shared global state.

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace cmint {

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits, long value = 0);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_string(mpfr_prec_t bits, const std::string& decimal);
  static BigReal pi(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Fixed-point decimal rendering with `digits` digits after the point.
  std::string to_string(int digits) const;
  /// Scientific notation with `digits` significant digits after the point.
  std::string to_sci_string(int digits) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a);
  BigReal& operator+=(const BigReal& b);
  BigReal& operator*=(const BigReal& b);

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
/// log of a positive integer at the given precision.
BigReal log_of(mpfr_prec_t bits, std::int64_t n);

/// Complex number over BigReal, enough arithmetic for q-series.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, long s);
};

BigReal abs(const BigComplex& z);

/// Bits needed for `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace cmint
