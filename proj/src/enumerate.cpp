#include "cmint/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cmint/exactnum.hpp"

namespace cmint {

std::vector<CmFieldData> enumerate_fields(std::int64_t D, std::int64_t bound) {
  std::vector<CmFieldData> out;
  if (bound < 1 || !is_prime(D) || D % 4 != 1) return out;

  // A canonical Delta has |Delta|/|Delta'| within a factor eta of 1, so
  // |u| = |Delta| + |Delta'| <= sqrt(N) (sqrt(eta) + 1/sqrt(eta)).
  const QuadElem eta = totally_positive_unit_generator(D);
  const double eta_big = (eta.u() + std::abs(eta.v()) * std::sqrt(static_cast<double>(D))) / 2.0;
  const auto u_max = static_cast<std::int64_t>(
      std::ceil(std::sqrt(static_cast<double>(bound)) * (std::sqrt(eta_big) + 1.0 / std::sqrt(eta_big)))) + 2;

  for (std::int64_t u = -1; u >= -u_max; --u) {
    for (std::int64_t v = -isqrt(u * u / D); v * v * D < u * u; ++v) {
      if (((u - v) % 2 + 2) % 2 != 0) continue;
      const std::int64_t four_norm = u * u - D * v * v;
      if (four_norm <= 0 || four_norm > 4 * bound) continue;
      const QuadElem delta = QuadElem::from_uv(D, u, v);
      if (!(canonical_delta(delta) == delta)) continue;
      const std::int64_t dt = delta.norm();
      if (dt % 4 != 1 || is_perfect_square(dt) || !is_squarefree(dt)) continue;
      for (std::int64_t w0 = 0; w0 < 2; ++w0)
        for (std::int64_t w1 = 0; w1 < 2; ++w1)
          if (check_cm_field(D, delta, w0, w1).empty()) out.push_back(CmFieldData{D, delta, w0, w1, dt});
    }
  }
  std::sort(out.begin(), out.end(), [](const CmFieldData& a, const CmFieldData& b) {
    return std::tuple(a.dtilde, a.u(), a.v(), a.w0, a.w1) < std::tuple(b.dtilde, b.u(), b.v(), b.w0, b.w1);
  });
  return out;
}

}  // namespace cmint
