#pragma once

// The degenerate case D = 1: pairs of imaginary quadratic fields of coprime
// fundamental discriminants d1, d2 = 1 mod 4, where the intersection number
// is log|J(d1, d2)|, the Gross-Zagier norm of differences of singular moduli.
// The closed formula is checked against a direct evaluation of j at the
// Heegner points.

#include <cstdint>
#include <vector>

#include "cmint/bigreal.hpp"
#include "cmint/exactnum.hpp"
#include "cmint/intersect.hpp"

namespace cmint {

struct GzParams {
  std::int64_t d1;
  std::int64_t d2;

  /// Throws std::invalid_argument unless both are negative fundamental
  /// discriminants, 1 mod 4 and coprime.
  static GzParams make(std::int64_t d1, std::int64_t d2);
  std::int64_t dtilde() const { return d1 * d2; }
};

/// Primitive binary quadratic form A x^2 + B xy + C y^2.
struct HeegnerForm {
  std::int64_t A;
  std::int64_t B;
  std::int64_t C;

  std::int64_t disc() const { return B * B - 4 * A * C; }
  friend bool operator==(const HeegnerForm&, const HeegnerForm&) = default;
};

/// (d1|l) if l does not divide d1, else (d2|l).
int epsilon_of(std::int64_t l, const GzParams& params);

/// Sum over n > 0 with (Dtilde - n^2)/4 in p Z_{>0}.
Rational gz_intersection_at_p(const GzParams& params, std::int64_t p);

IntersectionResult gz_total(const GzParams& params, unsigned jobs = 1);

/// One reduced primitive form per SL_2(Z) class, sorted by (A, B).
/// Throws std::invalid_argument unless d < 0 and d = 0, 1 mod 4.
std::vector<HeegnerForm> reduced_forms(std::int64_t d);

/// Number of units of the order of discriminant d.
int unit_count(std::int64_t d);

/// j((-B + sqrt d)/(2A)), accurate to about `digits` decimal digits
/// relative to max(1, |j|).
BigComplex j_invariant(const HeegnerForm& form, int digits);

/// sum over pairs of reduced forms of (4/(w1 w2)) log|j(tau1) - j(tau2)|.
/// Throws std::invalid_argument for digits < 30.
BigReal singular_moduli_log(const GzParams& params, int digits, unsigned jobs = 1);

/// sum_p c_p log p evaluated at the given precision.
BigReal evaluate_log(const IntersectionResult& result, int digits);

}  // namespace cmint
