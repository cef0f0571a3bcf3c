#include "cmint/gzmoduli.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cmint/parallel.hpp"

namespace cmint {

namespace {

constexpr int kMinDigits = 30;
constexpr int kGuardDigits = 10;

void require_fundamental_one_mod_four(std::int64_t d) {
  if (d >= 0) throw std::invalid_argument("discriminant " + std::to_string(d) + " is not negative");
  if (((d % 4) + 4) % 4 != 1)
    throw std::invalid_argument("discriminant " + std::to_string(d) + " is not 1 mod 4");
  if (!is_squarefree(-d)) throw std::invalid_argument("discriminant " + std::to_string(d) + " is not fundamental");
}

// Smallest N such that sum_{n > N} n^4 r^n < 10^(-target_digits).
int e4_terms(double r, double target_digits) {
  for (int N = 1;; ++N) {
    const double ratio = r * std::pow((N + 2.0) / (N + 1.0), 4);
    if (ratio >= 1.0) continue;
    const double log10_tail = 4 * std::log10(N + 1.0) + (N + 1) * std::log10(r) - std::log10(1 - ratio);
    if (log10_tail < -target_digits) return N;
  }
}

// Smallest K such that the pentagonal tail 2 r^{(K+1)(3K+2)/2}/(1 - r) < 10^(-target_digits).
int pentagonal_terms(double r, double target_digits) {
  for (int K = 0;; ++K) {
    const double g = (K + 1.0) * (3.0 * K + 2.0) / 2.0;
    if (std::log10(2.0) + g * std::log10(r) - std::log10(1 - r) < -target_digits) return K;
  }
}

}  // namespace

GzParams GzParams::make(std::int64_t d1, std::int64_t d2) {
  require_fundamental_one_mod_four(d1);
  require_fundamental_one_mod_four(d2);
  if (std::gcd(d1, d2) != 1)
    throw std::invalid_argument("discriminants " + std::to_string(d1) + " and " + std::to_string(d2) +
                                " are not coprime");
  return GzParams{d1, d2};
}

int epsilon_of(std::int64_t l, const GzParams& params) {
  if (!is_prime(l)) throw std::invalid_argument("epsilon_of: l must be prime");
  if (params.d1 % l != 0) return kronecker_symbol(params.d1, l);
  if (params.d2 % l != 0) return kronecker_symbol(params.d2, l);
  throw std::invalid_argument("epsilon_of: l divides both discriminants");
}

Rational gz_intersection_at_p(const GzParams& params, std::int64_t p) {
  const GzParams checked = GzParams::make(params.d1, params.d2);
  if (!is_prime(p)) throw std::invalid_argument("gz_intersection_at_p: p must be prime");
  const std::int64_t dt = checked.dtilde();
  Rational total = 0;
  for (std::int64_t n = 1; n * n < dt; ++n) {
    if ((dt - n * n) % 4 != 0) continue;
    const std::int64_t m = (dt - n * n) / 4;
    if (m % p != 0) continue;
    Rational beta = 1;
    for (auto l : prime_divisors(m)) {
      const int t = padic_valuation(m, l);
      const int eps = epsilon_of(l, checked);
      if (l == p) {
        const int power = (t % 2 == 0) ? 1 : eps;
        beta *= Rational(1 - power, 2);
      } else if (eps == -1) {
        beta *= Rational(t % 2 == 0 ? 1 : 0);
      } else {
        beta *= t + 1;
      }
    }
    total += (padic_valuation(m, p) + 1) * beta;
  }
  return total / 2;
}

IntersectionResult gz_total(const GzParams& params, unsigned jobs) {
  const GzParams checked = GzParams::make(params.d1, params.d2);
  const std::int64_t dt = checked.dtilde();
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 1; n * n < dt; ++n)
    if ((dt - n * n) % 4 == 0)
      for (auto p : prime_divisors((dt - n * n) / 4)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const auto values = parallel_map(primes, [&](std::int64_t p) { return gz_intersection_at_p(checked, p); }, jobs);
  IntersectionResult result;
  result.field = "d1=" + std::to_string(checked.d1) + " d2=" + std::to_string(checked.d2);
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (values[i] != 0) result.coefficients.emplace(primes[i], values[i]);
  return result;
}

std::vector<HeegnerForm> reduced_forms(std::int64_t d) {
  if (d >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r != 0 && r != 1) throw std::invalid_argument("reduced_forms: discriminant must be 0 or 1 mod 4");
  std::vector<HeegnerForm> out;
  for (std::int64_t A = 1; 3 * A * A <= -d; ++A) {
    for (std::int64_t B = -A + 1; B <= A; ++B) {
      if (((B - d) % 2 + 2) % 2 != 0) continue;
      const std::int64_t num = B * B - d;
      if (num % (4 * A) != 0) continue;
      const std::int64_t C = num / (4 * A);
      if (C < A) continue;
      if (C == A && B < 0) continue;
      if (std::gcd(std::gcd(A, B), C) != 1) continue;
      out.push_back({A, B, C});
    }
  }
  return out;
}

int unit_count(std::int64_t d) {
  if (d == -3) return 6;
  if (d == -4) return 4;
  return 2;
}

BigComplex j_invariant(const HeegnerForm& form, int digits) {
  const std::int64_t d = form.disc();
  if (d >= 0 || form.A <= 0) throw std::invalid_argument("j_invariant: need a positive definite form");
  // |q| = exp(-pi sqrt|d| / A); |j| is roughly 1/|q|.
  const double log10_inv_r = M_PI * std::sqrt(static_cast<double>(-d)) / form.A / std::log(10.0);
  const double r = std::pow(10.0, -log10_inv_r);
  const int magnitude = static_cast<int>(std::ceil(log10_inv_r)) + 2;
  const double target = digits + kGuardDigits + magnitude;
  const mpfr_prec_t bits = bits_for_digits(static_cast<int>(target) + 2 * magnitude);

  const BigReal pi = BigReal::pi(bits);
  const BigReal radius = exp(-(pi * sqrt(BigReal(bits, static_cast<long>(-d)))) / BigReal(bits, static_cast<long>(form.A)));
  const BigReal angle = -(pi * static_cast<long>(form.B)) / BigReal(bits, static_cast<long>(form.A));
  const BigComplex q(radius * cos(angle), radius * sin(angle));

  const int n_e4 = e4_terms(r, target);
  const int k_eta = pentagonal_terms(r, target);
  // Largest pentagonal exponent is K(3K+1)/2 at k = -K.
  const std::int64_t max_pow = std::max<std::int64_t>(n_e4, static_cast<std::int64_t>(k_eta) * (3 * k_eta + 1) / 2);

  std::vector<BigComplex> qpow;
  qpow.reserve(static_cast<std::size_t>(max_pow) + 1);
  qpow.emplace_back(BigReal(bits, 1), BigReal(bits, 0));
  for (std::int64_t i = 1; i <= max_pow; ++i) qpow.push_back(qpow.back() * q);

  // E4 = 1 + 240 sum sigma_3(n) q^n
  BigComplex e4(BigReal(bits, 1), BigReal(bits, 0));
  for (int n = 1; n <= n_e4; ++n) {
    long sigma3 = 0;
    for (long k = 1; k * k <= n; ++k) {
      if (n % k) continue;
      sigma3 += k * k * k;
      const long other = n / k;
      if (other != k) sigma3 += other * other * other;
    }
    e4 = e4 + qpow[static_cast<std::size_t>(n)] * (240L * sigma3);
  }

  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}
  BigComplex eta_prod(BigReal(bits, 0), BigReal(bits, 0));
  for (std::int64_t k = -k_eta; k <= k_eta; ++k) {
    const std::int64_t e = k * (3 * k - 1) / 2;
    const BigComplex term = qpow[static_cast<std::size_t>(e)];
    eta_prod = (k % 2 == 0) ? eta_prod + term : eta_prod - term;
  }

  BigComplex p24 = eta_prod;
  for (int i = 0; i < 3; ++i) p24 = p24 * p24;  // ^8
  p24 = p24 * p24 * p24;                         // ^24
  const BigComplex discriminant = q * p24;
  return (e4 * e4 * e4) / discriminant;
}

BigReal singular_moduli_log(const GzParams& params, int digits, unsigned jobs) {
  if (digits < kMinDigits)
    throw std::invalid_argument("singular_moduli_log: precision below " + std::to_string(kMinDigits) +
                                " digits cannot honor the truncation bound");
  const GzParams checked = GzParams::make(params.d1, params.d2);
  const auto forms1 = reduced_forms(checked.d1);
  const auto forms2 = reduced_forms(checked.d2);
  std::vector<HeegnerForm> all = forms1;
  all.insert(all.end(), forms2.begin(), forms2.end());
  const auto values = parallel_map(all, [&](const HeegnerForm& f) { return j_invariant(f, digits + kGuardDigits); }, jobs);

  const mpfr_prec_t bits = values.empty() ? bits_for_digits(digits) : values.front().re.precision();
  const long weight_den = static_cast<long>(unit_count(checked.d1)) * unit_count(checked.d2);
  // Fixed accumulation order: forms1 outer, forms2 inner.
  BigReal total(bits, 0);
  for (std::size_t i = 0; i < forms1.size(); ++i)
    for (std::size_t k = 0; k < forms2.size(); ++k) total += log(abs(values[i] - values[forms1.size() + k]));
  return total * 4L / BigReal(bits, weight_den);
}

BigReal evaluate_log(const IntersectionResult& result, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits + kGuardDigits);
  BigReal total(bits, 0);
  for (const auto& [p, c] : result.coefficients) {
    const BigReal num = BigReal::from_string(bits, boost::multiprecision::numerator(c).str());
    const BigReal den = BigReal::from_string(bits, boost::multiprecision::denominator(c).str());
    total += num * log_of(bits, p) / den;
  }
  return total;
}

}  // namespace cmint
