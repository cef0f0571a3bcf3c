#pragma once

// Gross-Keating invariants for the two ternary shapes that occur for the
// matrices T(mu n), the local intersection index they determine, and the
// local representation density formula.

#include <cstdint>
#include <optional>
#include <variant>

#include "cmint/exactnum.hpp"

namespace cmint {

struct GkInvariants {
  int a0 = 0;
  int a1 = 0;
  int a2 = 0;

  bool sorted() const { return 0 <= a0 && a0 <= a1 && a1 <= a2; }
  friend bool operator==(const GkInvariants&, const GkInvariants&) = default;
};

struct GkData {
  GkInvariants invariants;
  std::optional<int> epsilon;  // +1/-1 where the sign is defined
  std::int64_t l;
};

/// diag(1, alpha, alpha^{-1} d) over Z_l for odd l, alpha an l-adic unit.
struct OddDiagonalShape {
  std::int64_t alpha;
  std::int64_t det;
};

/// diag(unit * 2^t0, [[A, 1/2], [1/2, A]]) over Z_2 with A in {0, 1}.
struct DyadicShape {
  std::int64_t unit;
  int t0;
  int A;
};

using TernaryShape = std::variant<OddDiagonalShape, DyadicShape>;

/// Throws std::invalid_argument for a shape outside the two supported
/// families (wrong prime, non-unit alpha, A not in {0,1}, ...).
GkData gk_invariants(const TernaryShape& shape, std::int64_t l);

/// Local intersection index from the invariants; lies in (1/2) Z_{>0}.
/// Throws std::invalid_argument on unsorted invariants.
Rational gk_index(const GkInvariants& inv, std::int64_t p);

/// Local density at l of an isotropic form with the given invariants and
/// epsilon sign. Isotropy is not checked here.
Integer gk_density(const GkInvariants& inv, int epsilon, std::int64_t l);

/// (-alpha, l)_l^t == 1. Throws std::invalid_argument when l | alpha.
bool is_isotropic(std::int64_t alpha, int t, std::int64_t l);

/// The local factor at l of T(mu n) obtained from the density formula with
/// explicit isotropy gating: for l = p it is 1 on anisotropic forms and 0
/// otherwise; for l != p it is the density of the (0, 0, t) form when
/// isotropic and 0 otherwise. Requires l prime to alpha.
Rational gated_density_factor(std::int64_t p, std::int64_t alpha, int t, std::int64_t l);

}  // namespace cmint
