#pragma once

// Exact integer and rational helpers: valuations, factorization, and the
// quadratic residue symbols over Q.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmint {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A place of Q: a rational prime or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(std::int64_t p);

  bool is_infinite() const { return p_ == 0; }
  /// The underlying prime; 0 for the archimedean place.
  std::int64_t prime_number() const { return p_; }

  friend bool operator==(const Place&, const Place&) = default;

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Place& v);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer value() const;
  std::vector<std::int64_t> primes() const;
  std::string to_string() const;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::int64_t n);

/// Largest e with p^e | x. Throws on x == 0 or composite p.
int padic_valuation(std::int64_t x, std::int64_t p);
int padic_valuation(const Integer& x, std::int64_t p);

/// Trial division. Throws std::invalid_argument on n == 0; negative n sets
/// the sign flag.
Factorization factorize(std::int64_t n);

/// Distinct primes dividing |n|, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_squarefree(std::int64_t n);
bool is_perfect_square(std::int64_t n);
std::int64_t isqrt(std::int64_t n);

/// Primes p with lo <= p <= hi.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Kronecker symbol (a|n). Throws on n == 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// Hilbert symbol (a,b)_v for nonzero rationals. Throws on zero input.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Hilbert symbol at the prime p (convenience for integer arguments).
int hilbert_symbol(std::int64_t a, std::int64_t b, std::int64_t p);

/// Places at which (a,b)_v can be -1: infinity, 2, and every prime dividing
/// a numerator or denominator.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

std::string to_string(const Rational& r);

}  // namespace cmint
