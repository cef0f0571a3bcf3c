#pragma once

// Intersection numbers (T_1 . CM(K))_p as exact rationals, and the
// independently assembled reflex-side quantity b_1(p).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmint/exactnum.hpp"
#include "cmint/quadcm.hpp"
#include "cmint/tmatrix.hpp"

namespace cmint {

/// Data of one prime l | (Dtilde - n^2)/(4D) for a fixed T(mu n).
struct LocalFactor {
  std::int64_t l;
  std::int64_t alpha;  // unit at l diagonalizing T over Z_l
  int t;               // ord_l (Dtilde - n^2)/(4D)
  int symbol;          // (-alpha, l)_l
  Rational beta;
};

enum class Splitting { kSplit, kInert, kRamified };

std::string to_string(Splitting s);

/// Splitting data at the chosen prime of the real quadratic subfield of the
/// reflex field lying over l.
struct ReflexLocalData {
  std::int64_t l;
  Splitting in_ftilde;  // split or ramified; inert cannot occur
  Splitting in_ktilde;
  int ord;              // valuation entering the rho factor
};

/// Formal sum sum_p c_p log p.
struct IntersectionResult {
  std::map<std::int64_t, Rational> coefficients;
  std::string field;

  bool empty() const { return coefficients.empty(); }
  /// "1·log 2 + 1/2·log 3", or "0".
  std::string formal_sum() const;
};

/// a if l does not divide a, else c. Throws std::logic_error if l divides
/// both (a corrupted T).
std::int64_t alpha_unit(const TMatrix& t, std::int64_t l);

LocalFactor local_factor(std::int64_t p, const TMatrix& t, std::int64_t l);

/// Closed-form local factor beta_l(p, mu n). Requires l | det(T)/4.
Rational beta_l(std::int64_t p, const TMatrix& t, std::int64_t l);

/// Product of beta_l over the distinct primes of det(T)/4. Requires p | det(T)/4.
Rational beta_product(std::int64_t p, const TMatrix& t);

Rational intersection_at_p(const CmFieldData& cm, std::int64_t p);

/// All nonzero coefficients; primes evaluated on `jobs` threads.
IntersectionResult intersection_total(const CmFieldData& cm, unsigned jobs = 1);

/// Splitting of the chosen prime over l in the reflex field. The flag marks
/// the chosen prime as the one dividing the relative discriminant.
Splitting split_in_ktilde(const CmFieldData& cm, const TMatrix& t, std::int64_t l, bool is_ramified_prime_over_D);

/// rho factor at one prime: 1 (ramified), (1 + (-1)^ord)/2 (inert),
/// 1 + ord (split); 0 for negative ord unless ramified.
Integer rho_local(Splitting splitting, int ord);

/// Per-prime reflex data for T(mu n) at the prime p.
std::vector<ReflexLocalData> reflex_local_data(const CmFieldData& cm, const TMatrix& t, std::int64_t p);

/// b(p, mu n): zero if the chosen prime over p splits in the reflex field,
/// otherwise the product of rho factors.
Integer b_term(const CmFieldData& cm, const TMatrix& t, std::int64_t p);

/// b_1(p), a nonnegative integer (returned as a rational for comparison).
Rational b1_at_p(const CmFieldData& cm, std::int64_t p);

/// Every prime p <= Dtilde/(4D).
std::vector<std::int64_t> support_candidates(const CmFieldData& cm);

struct B1Check {
  std::int64_t p;
  Rational coefficient;  // (T_1 . CM(K))_p
  Rational b1;
  bool ok;  // b1 == 2 * coefficient
};

/// Compares b_1(p) with twice the intersection number at every prime
/// p <= Dtilde/(4D).
std::vector<B1Check> b1_comparison(const CmFieldData& cm);

}  // namespace cmint
