#pragma once

// The positive definite integral matrices T(mu n) = [[a, b], [b, c]] attached
// to each admissible n, with det T = (Dtilde - n^2)/D.

#include <cstdint>
#include <string>
#include <vector>

#include "cmint/quadcm.hpp"

namespace cmint {

struct TMatrix {
  std::int64_t n;
  int mu;
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t det() const { return a * c - b * b; }
  /// (Dtilde - n^2)/(4D) = det/4, the integer whose prime divisors index
  /// the local factors.
  std::int64_t reduced_det() const { return det() / 4; }

  friend bool operator==(const TMatrix&, const TMatrix&) = default;
};

struct AdmissibleN {
  std::int64_t n;
  std::vector<int> mus;       // +1/-1, both when D | n
  std::int64_t reduced_det;   // (Dtilde - n^2)/(4D)
};

/// All 0 < n < sqrt(Dtilde) with (Dtilde - n^2)/(4D) a positive integer,
/// ascending, each with its admissible signs.
std::vector<AdmissibleN> admissible_n(const CmFieldData& cm);

/// c = (2 mu n - u)/D, b = (-v - Dc)/2, a = -mu n - Db - ((D^2 - D)/4) c.
/// Throws std::invalid_argument when (n, mu) is not admissible for cm.
TMatrix build_tmatrix(const CmFieldData& cm, std::int64_t n, int mu);

/// Every matrix T(mu n) of the field, in ascending n then descending mu.
std::vector<TMatrix> all_tmatrices(const CmFieldData& cm);

/// One of a, c is 0 mod 4 and the other -1 mod 4.
bool has_diagonal_zero_minus_one(const TMatrix& t);

/// Some Z-basis puts the diagonal of T at 0 and -1 mod 4. Besides the case
/// above this covers a = c = -1 mod 4 with b odd, which occurs for exactly
/// one of Delta and its conjugate whenever it occurs at all.
bool has_unit_dyadic_shape(const TMatrix& t);

/// Human-readable list of structural invariants T violates (empty when all
/// hold): determinant, trace identity, positivity, the mod 4 shape (in its
/// basis-independent form), and coprimality of a, c at every prime of det.
std::vector<std::string> tmatrix_violations(const CmFieldData& cm, const TMatrix& t);

/// The element (2 mu n - Dc - (2b + Dc) sqrt D)/2, which must equal Delta.
QuadElem reconstruct_delta(const CmFieldData& cm, const TMatrix& t);

}  // namespace cmint
