#include "cmint/intersect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cmint/diagnostics.hpp"
#include "cmint/parallel.hpp"

namespace cmint {

namespace {

void require_divides_reduced_det(const TMatrix& t, std::int64_t l) {
  const std::int64_t m = t.reduced_det();
  if (m <= 0 || t.det() % 4 != 0 || m % l != 0)
    throw std::invalid_argument("prime " + std::to_string(l) + " does not divide (Dtilde - n^2)/(4D) = " +
                                std::to_string(m));
}

// Admissible n whose (Dtilde - n^2)/(4D) is divisible by p.
std::vector<AdmissibleN> terms_at(const CmFieldData& cm, std::int64_t p) {
  std::vector<AdmissibleN> out;
  for (auto& adm : admissible_n(cm))
    if (adm.reduced_det % p == 0) out.push_back(std::move(adm));
  return out;
}

}  // namespace

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::kSplit: return "split";
    case Splitting::kInert: return "inert";
    case Splitting::kRamified: return "ramified";
  }
  return "?";
}

std::string IntersectionResult::formal_sum() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coefficients) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "·log " << p;
  }
  return os.str();
}

std::int64_t alpha_unit(const TMatrix& t, std::int64_t l) {
  if (t.a % l != 0) return t.a;
  if (t.c % l != 0) return t.c;
  throw std::logic_error("alpha_unit: " + std::to_string(l) + " divides both a and c of T(" +
                         std::to_string(t.mu * t.n) + ")");
}

LocalFactor local_factor(std::int64_t p, const TMatrix& t, std::int64_t l) {
  require_divides_reduced_det(t, l);
  LocalFactor f{};
  f.l = l;
  f.alpha = alpha_unit(t, l);
  f.t = padic_valuation(t.reduced_det(), l);
  f.symbol = hilbert_symbol(-f.alpha, l, l);
  if (l == p) {
    const int power = (f.t % 2 == 0) ? 1 : f.symbol;
    f.beta = Rational(1 - power, 2);
  } else if (f.symbol == -1) {
    f.beta = Rational(1 + (f.t % 2 == 0 ? 1 : -1), 2);
  } else {
    f.beta = f.t + 1;
  }
  return f;
}

Rational beta_l(std::int64_t p, const TMatrix& t, std::int64_t l) { return local_factor(p, t, l).beta; }

Rational beta_product(std::int64_t p, const TMatrix& t) {
  require_divides_reduced_det(t, p);
  Rational product = 1;
  for (auto l : prime_divisors(t.reduced_det())) {
    product *= beta_l(p, t, l);
    if (product == 0) break;
  }
  return product;
}

Rational intersection_at_p(const CmFieldData& cm, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("intersection_at_p: p must be prime");
  Rational total = 0;
  for (const auto& adm : terms_at(cm, p)) {
    const int tp = padic_valuation(adm.reduced_det, p);
    Rational inner = 0;
    for (int mu : adm.mus) inner += beta_product(p, build_tmatrix(cm, adm.n, mu));
    total += (tp + 1) * inner;
  }
  return total / 2;
}

std::vector<std::int64_t> support_candidates(const CmFieldData& cm) {
  return primes_in_range(2, cm.dtilde / (4 * cm.D));
}

IntersectionResult intersection_total(const CmFieldData& cm, unsigned jobs) {
  // Only primes dividing some (Dtilde - n^2)/(4D) can contribute.
  std::vector<std::int64_t> primes;
  for (const auto& adm : admissible_n(cm))
    for (auto p : prime_divisors(adm.reduced_det)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  const auto values = parallel_map(primes, [&](std::int64_t p) { return intersection_at_p(cm, p); }, jobs);
  IntersectionResult result;
  result.field = cm.label();
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (values[i] != 0) result.coefficients.emplace(primes[i], values[i]);
  return result;
}

Splitting split_in_ktilde(const CmFieldData& cm, const TMatrix& t, std::int64_t l, bool is_ramified_prime_over_D) {
  if (is_ramified_prime_over_D) return Splitting::kRamified;
  const bool divides = t.reduced_det() > 0 && t.reduced_det() % l == 0;
  if (!divides && l != cm.D)
    throw std::invalid_argument("split_in_ktilde: l must divide (Dtilde - n^2)/(4D) or equal D");
  std::int64_t alpha;
  if (l == cm.D && t.n % cm.D != 0) {
    // The chosen prime is the conjugate of the relative discriminant; there
    // the reflex generator reduces to -4a, so a is the unit to test.
    if (t.a % l == 0) throw std::logic_error("split_in_ktilde: D divides a although D does not divide n");
    alpha = t.a;
    diagnostic("l = D = " + std::to_string(l) + " at n = " + std::to_string(t.n) + ": using alpha = a");
  } else {
    alpha = alpha_unit(t, l);
  }
  return hilbert_symbol(-alpha, l, l) == 1 ? Splitting::kSplit : Splitting::kInert;
}

Integer rho_local(Splitting splitting, int ord) {
  switch (splitting) {
    case Splitting::kRamified: return 1;
    case Splitting::kInert: return (ord >= 0 && ord % 2 == 0) ? 1 : 0;
    case Splitting::kSplit: return ord >= 0 ? Integer(1 + ord) : Integer(0);
  }
  return 0;
}

std::vector<ReflexLocalData> reflex_local_data(const CmFieldData& cm, const TMatrix& t, std::int64_t p) {
  std::vector<ReflexLocalData> out;
  const std::int64_t m = t.reduced_det();
  for (auto l : prime_divisors(m)) {
    ReflexLocalData r{};
    r.l = l;
    switch (kronecker_symbol(cm.dtilde, l)) {
      case 1: r.in_ftilde = Splitting::kSplit; break;
      case 0: r.in_ftilde = Splitting::kRamified; break;
      default:
        // n^2 = Dtilde mod l rules this out.
        throw std::logic_error("reflex_local_data: " + std::to_string(l) + " inert in the real reflex subfield");
    }
    // The chosen prime over l is the ramified one only when l = D | n.
    const bool ramified = (l == cm.D && t.n % cm.D == 0);
    if (ramified) diagnostic("chosen prime over " + std::to_string(l) + " is the relative discriminant");
    r.in_ktilde = split_in_ktilde(cm, t, l, ramified);
    const int tl = padic_valuation(m, l);
    r.ord = (l == p) ? tl - 1 : tl;
    out.push_back(r);
  }
  return out;
}

Integer b_term(const CmFieldData& cm, const TMatrix& t, std::int64_t p) {
  if (t.reduced_det() % p != 0) throw std::invalid_argument("b_term: p must divide (Dtilde - n^2)/(4D)");
  const auto data = reflex_local_data(cm, t, p);
  Integer product = 1;
  for (const auto& r : data) {
    if (r.l == p && r.in_ktilde == Splitting::kSplit) return 0;
    product *= rho_local(r.in_ktilde, r.ord);
  }
  return product;
}

Rational b1_at_p(const CmFieldData& cm, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("b1_at_p: p must be prime");
  Integer total = 0;
  for (const auto& adm : terms_at(cm, p)) {
    const int tp = padic_valuation(adm.reduced_det, p);
    Integer inner = 0;
    for (int mu : adm.mus) inner += b_term(cm, build_tmatrix(cm, adm.n, mu), p);
    total += (tp + 1) * inner;
  }
  return Rational(total);
}

std::vector<B1Check> b1_comparison(const CmFieldData& cm) {
  std::vector<B1Check> out;
  for (auto p : support_candidates(cm)) {
    const Rational c = intersection_at_p(cm, p);
    const Rational b = b1_at_p(cm, p);
    out.push_back({p, c, b, b == 2 * c});
  }
  return out;
}

}  // namespace cmint
