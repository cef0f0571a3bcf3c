#include "cmint/grosskeating.hpp"

#include <stdexcept>
#include <string>

namespace cmint {

namespace {

void require_sorted(const GkInvariants& inv) {
  if (!inv.sorted())
    throw std::invalid_argument("Gross-Keating invariants must satisfy 0 <= a0 <= a1 <= a2, got (" +
                                std::to_string(inv.a0) + ", " + std::to_string(inv.a1) + ", " +
                                std::to_string(inv.a2) + ")");
}

Integer ipow(std::int64_t base, int e) { return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(e)); }

}  // namespace

GkData gk_invariants(const TernaryShape& shape, std::int64_t l) {
  if (!is_prime(l)) throw std::invalid_argument("gk_invariants: l must be prime");
  if (const auto* odd = std::get_if<OddDiagonalShape>(&shape)) {
    if (l == 2) throw std::invalid_argument("gk_invariants: diagonal shape is only classified here for odd l");
    if (odd->alpha % l == 0) throw std::invalid_argument("gk_invariants: alpha must be an l-adic unit");
    if (odd->det == 0) throw std::invalid_argument("gk_invariants: degenerate form");
    const int t = padic_valuation(odd->det, l);
    return GkData{{0, 0, t}, hilbert_symbol(-odd->alpha, l, l), l};
  }
  const auto& dy = std::get<DyadicShape>(shape);
  if (l != 2) throw std::invalid_argument("gk_invariants: dyadic shape requires l = 2");
  if (dy.A != 0 && dy.A != 1) throw std::invalid_argument("gk_invariants: A must be 0 or 1");
  if (dy.unit % 2 == 0) throw std::invalid_argument("gk_invariants: dyadic unit must be odd");
  if (dy.t0 < 0) throw std::invalid_argument("gk_invariants: t0 must be nonnegative");
  return GkData{{0, 0, dy.t0}, dy.A == 0 ? 1 : -1, 2};
}

Rational gk_index(const GkInvariants& inv, std::int64_t p) {
  require_sorted(inv);
  const auto [a0, a1, a2] = inv;
  Rational total = 0;
  for (int i = 0; i <= a0 - 1; ++i) total += Integer(i + 1) * (a0 + a1 + a2 - 3 * i) * ipow(p, i);
  const bool even = (a1 - a0) % 2 == 0;
  // Upper limit (a0 + a1 - 2)/2 in the even case, (a0 + a1 - 1)/2 in the odd.
  const int upper = even ? (a0 + a1 - 2) / 2 : (a0 + a1 - 1) / 2;
  for (int i = a0; i <= upper; ++i) total += Integer(a0 + 1) * (2 * a0 + a1 + a2 - 4 * i) * ipow(p, i);
  if (even) total += Rational(Integer(a0 + 1) * (a2 - a1 + 1) * ipow(p, (a0 + a1) / 2), 2);
  return total;
}

Integer gk_density(const GkInvariants& inv, int epsilon, std::int64_t l) {
  require_sorted(inv);
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("gk_density: epsilon must be +1 or -1");
  const auto [a0, a1, a2] = inv;
  Integer total = 0;
  for (int i = 0; i <= a0 - 1; ++i) total += 2 * Integer(i + 1) * ipow(l, i);
  if ((a0 - a1) % 2 == 0) {
    for (int i = a0; i <= (a0 + a1 - 2) / 2; ++i) total += 2 * Integer(i + 1) * ipow(l, i);
    const Integer top = ipow(l, (a0 + a1) / 2);
    total += epsilon == 1 ? Integer(a0 + 1) * (a2 - a1 + 1) * top : Integer(a0 + 1) * top;
  } else {
    for (int i = a0; i <= (a0 + a1 - 1) / 2; ++i) total += 2 * Integer(i + 1) * ipow(l, i);
  }
  return total;
}

bool is_isotropic(std::int64_t alpha, int t, std::int64_t l) {
  if (!is_prime(l)) throw std::invalid_argument("is_isotropic: l must be prime");
  if (alpha % l == 0) throw std::invalid_argument("is_isotropic: alpha must be prime to l");
  if (t < 0) throw std::invalid_argument("is_isotropic: t must be nonnegative");
  const int symbol = hilbert_symbol(-alpha, l, l);
  return symbol == 1 || t % 2 == 0;
}

Rational gated_density_factor(std::int64_t p, std::int64_t alpha, int t, std::int64_t l) {
  const bool isotropic = is_isotropic(alpha, t, l);
  if (l == p) return isotropic ? 0 : 1;
  if (!isotropic) return 0;
  return Rational(gk_density(GkInvariants{0, 0, t}, hilbert_symbol(-alpha, l, l), l));
}

}  // namespace cmint
