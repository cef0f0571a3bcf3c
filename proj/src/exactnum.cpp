#include "cmint/exactnum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cmint {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_round(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("expected a prime, got " + std::to_string(p));
}

// Square class representative: num/den ~ num*den.
Integer square_class(const Rational& r) {
  return boost::multiprecision::numerator(r) * boost::multiprecision::denominator(r);
}

std::int64_t mod_small(const Integer& x, std::int64_t m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

}  // namespace

Place Place::prime(std::int64_t p) {
  require_prime(p);
  return Place(p);
}

std::ostream& operator<<(std::ostream& os, const Place& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.prime_number();
}

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(e));
  return v;
}

std::vector<std::int64_t> Factorization::primes() const {
  std::vector<std::int64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (factors.empty()) return os.str() + "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << factors[i].prime;
    if (factors[i].exponent > 1) os << "^" << factors[i].exponent;
  }
  return os.str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (static_cast<u64>(n) == p) return true;
    if (static_cast<u64>(n) % p == 0) return false;
  }
  u64 d = static_cast<u64>(n) - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases)
    if (!miller_rabin_round(static_cast<u64>(n), a, d, s)) return false;
  return true;
}

int padic_valuation(std::int64_t x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("padic_valuation: zero has infinite valuation");
  require_prime(p);
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

int padic_valuation(const Integer& x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("padic_valuation: zero has infinite valuation");
  require_prime(p);
  Integer y = x;
  int e = 0;
  while (y % p == 0) {
    y /= p;
    ++e;
  }
  return e;
}

Factorization factorize(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  Factorization f;
  if (n < 0) {
    f.sign = -1;
    n = -n;
  }
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::int64_t p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) { return factorize(n).primes(); }

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker_symbol: n must be nonzero");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Factor of 2 in n: (a|2) = 0 for even a, else +1 iff a = +-1 mod 8.
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos) {
    if ((a & 1) == 0) return 0;
    const std::int64_t a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a|n) for odd positive n.
  std::int64_t m = n;
  std::int64_t x = ((a % m) + m) % m;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const std::int64_t m8 = m % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

  const std::int64_t p = v.prime_number();
  Integer ua = square_class(a);
  Integer ub = square_class(b);
  const int alpha = padic_valuation(ua, p);
  const int beta = padic_valuation(ub, p);
  const Integer pp = p;
  ua /= boost::multiprecision::pow(pp, static_cast<unsigned>(alpha));
  ub /= boost::multiprecision::pow(pp, static_cast<unsigned>(beta));

  if (p == 2) {
    const std::int64_t u = mod_small(ua, 8);
    const std::int64_t w = mod_small(ub, 8);
    const auto eps = [](std::int64_t x) { return ((x - 1) / 2) & 1; };
    const auto omega = [](std::int64_t x) { return ((x * x - 1) / 8) & 1; };
    const std::int64_t e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e & 1) ? -1 : 1;
  }

  int result = 1;
  if ((alpha & 1) && (beta & 1) && (p % 4 == 3)) result = -result;
  if (beta & 1) result *= kronecker_symbol(mod_small(ua, p), p);
  if (alpha & 1) result *= kronecker_symbol(mod_small(ub, p), p);
  return result;
}

int hilbert_symbol(std::int64_t a, std::int64_t b, std::int64_t p) {
  return hilbert_symbol(Rational(a), Rational(b), Place::prime(p));
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<std::int64_t> primes = {2};
  for (const Integer& part : {boost::multiprecision::numerator(a), boost::multiprecision::denominator(a),
                              boost::multiprecision::numerator(b), boost::multiprecision::denominator(b)}) {
    const Integer mag = abs(part);
    if (mag <= 1) continue;
    for (auto p : prime_divisors(mag.convert_to<std::int64_t>())) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out = {Place::infinity()};
  for (auto p : primes) out.push_back(Place::prime(p));
  return out;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace cmint
