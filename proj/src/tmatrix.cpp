#include "cmint/tmatrix.hpp"

#include <stdexcept>

#include "cmint/exactnum.hpp"

namespace cmint {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

[[noreturn]] void inadmissible(std::int64_t n, int mu, const std::string& why) {
  throw std::invalid_argument("T(" + std::to_string(mu * n) + ") does not exist: " + why);
}

}  // namespace

std::vector<AdmissibleN> admissible_n(const CmFieldData& cm) {
  std::vector<AdmissibleN> out;
  const std::int64_t D = cm.D;
  for (std::int64_t n = 1; n * n < cm.dtilde; ++n) {
    const std::int64_t diff = cm.dtilde - n * n;
    if (diff % (4 * D) != 0) continue;
    AdmissibleN entry{n, {}, diff / (4 * D)};
    if (n % D == 0) {
      entry.mus = {1, -1};
    } else {
      for (int mu : {1, -1})
        if (floor_mod(cm.u() - 2 * mu * n, D) == 0) entry.mus.push_back(mu);
      if (entry.mus.size() != 1)
        throw std::logic_error("admissible_n: expected a unique sign for n = " + std::to_string(n));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

TMatrix build_tmatrix(const CmFieldData& cm, std::int64_t n, int mu) {
  if (mu != 1 && mu != -1) inadmissible(n, mu, "mu must be +1 or -1");
  if (n <= 0 || n * n >= cm.dtilde) inadmissible(n, mu, "need 0 < n < sqrt(Dtilde)");
  const std::int64_t D = cm.D;
  const std::int64_t diff = cm.dtilde - n * n;
  if (diff % (4 * D) != 0) inadmissible(n, mu, "(Dtilde - n^2)/(4D) is not an integer");

  const std::int64_t c_num = 2 * mu * n - cm.u();
  if (c_num % D != 0) inadmissible(n, mu, "c = (2 mu n - u)/D is not an integer");
  const std::int64_t c = c_num / D;
  if (c <= 0) inadmissible(n, mu, "c is not positive");
  const std::int64_t b_num = -cm.v() - D * c;
  if (b_num % 2 != 0) inadmissible(n, mu, "b = (-v - Dc)/2 is not an integer");
  const std::int64_t b = b_num / 2;
  const std::int64_t a = -mu * n - D * b - ((D * D - D) / 4) * c;
  TMatrix t{n, mu, a, b, c};
  if (t.det() * D != diff) inadmissible(n, mu, "det T != (Dtilde - n^2)/D");
  return t;
}

std::vector<TMatrix> all_tmatrices(const CmFieldData& cm) {
  std::vector<TMatrix> out;
  for (const auto& adm : admissible_n(cm))
    for (int mu : adm.mus) out.push_back(build_tmatrix(cm, adm.n, mu));
  return out;
}

QuadElem reconstruct_delta(const CmFieldData& cm, const TMatrix& t) {
  return QuadElem::from_uv(cm.D, 2 * t.mu * t.n - cm.D * t.c, -(2 * t.b + cm.D * t.c));
}

bool has_diagonal_zero_minus_one(const TMatrix& t) {
  const auto am = floor_mod(t.a, 4);
  const auto cm4 = floor_mod(t.c, 4);
  return (am == 0 && cm4 == 3) || (am == 3 && cm4 == 0);
}

bool has_unit_dyadic_shape(const TMatrix& t) {
  if (has_diagonal_zero_minus_one(t)) return true;
  // a = c = -1 mod 4 with b odd: in the basis (e1, e1 + e2) the diagonal is
  // (a, a + 2b + c) = (-1, 0) mod 4.
  return floor_mod(t.a, 4) == 3 && floor_mod(t.c, 4) == 3 && floor_mod(t.b, 2) == 1;
}

std::vector<std::string> tmatrix_violations(const CmFieldData& cm, const TMatrix& t) {
  std::vector<std::string> out;
  const std::int64_t D = cm.D;
  const std::int64_t det = t.det();
  if (det * D != cm.dtilde - t.n * t.n) out.push_back("det != (Dtilde - n^2)/D");
  if (det <= 0) out.push_back("det not positive");
  if (det % 4 != 0) out.push_back("4 does not divide det");
  if (t.a + D * t.b + ((D * D - D) / 4) * t.c != -t.mu * t.n) out.push_back("a + Db + (D^2-D)/4 c != -mu n");
  if (t.a <= 0) out.push_back("a not positive");
  if (!has_unit_dyadic_shape(t))
    out.push_back("no basis puts the diagonal at 0 and -1 mod 4");
  if (det > 0)
    for (auto q : prime_divisors(det))
      if (t.a % q == 0 && t.c % q == 0) out.push_back("prime " + std::to_string(q) + " divides both a and c");
  if (!(reconstruct_delta(cm, t) == cm.delta)) out.push_back("Delta reconstruction mismatch");
  return out;
}

}  // namespace cmint
