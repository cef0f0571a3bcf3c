#pragma once

// Arithmetic in the ring of integers of F = Q(sqrt D), D = 1 mod 4, and the
// admissibility test for quartic CM fields K = F(sqrt Delta) given by a
// relative integral basis {1, (w + sqrt Delta)/2}.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmint {

/// x + y*omega with omega = (D + sqrt D)/2. Equivalently (u + v sqrt D)/2
/// with u = 2x + yD, v = y.
class QuadElem {
 public:
  QuadElem(std::int64_t D, std::int64_t x, std::int64_t y);
  /// Throws std::invalid_argument unless u = v mod 2.
  static QuadElem from_uv(std::int64_t D, std::int64_t u, std::int64_t v);

  std::int64_t discriminant() const { return D_; }
  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }
  std::int64_t u() const { return 2 * x_ + y_ * D_; }
  std::int64_t v() const { return y_; }

  QuadElem conj() const;
  std::int64_t norm() const;
  std::int64_t trace() const { return u(); }
  bool is_totally_negative() const;
  bool is_totally_positive() const;
  /// True iff both omega-coordinates are divisible by m.
  bool divisible_by(std::int64_t m) const;

  friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
  friend bool operator==(const QuadElem&, const QuadElem&) = default;

 private:
  std::int64_t D_;
  std::int64_t x_;
  std::int64_t y_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& e);

/// Free functions mirroring the member API.
inline QuadElem conj(const QuadElem& e) { return e.conj(); }
inline std::int64_t norm(const QuadElem& e) { return e.norm(); }
inline std::int64_t trace(const QuadElem& e) { return e.trace(); }
inline bool is_totally_negative(const QuadElem& e) { return e.is_totally_negative(); }

enum class FieldViolation {
  kDNotPrime,
  kDNotOneModFour,
  kDeltaContextMismatch,
  kDeltaNotTotallyNegative,
  kDtildeNotOneModFour,
  kDtildeNotSquarefree,
  kDtildeIsSquare,
  kCongruenceFails,
};

std::string describe(FieldViolation v);
/// Stable short code, e.g. "D_NOT_PRIME".
std::string code(FieldViolation v);

class CmFieldError : public std::domain_error {
 public:
  explicit CmFieldError(std::vector<FieldViolation> violations);
  const std::vector<FieldViolation>& violations() const { return violations_; }

 private:
  std::vector<FieldViolation> violations_;
};

/// A validated admissible field: D prime = 1 mod 4, Delta totally negative,
/// Dtilde = Norm(Delta) = 1 mod 4 squarefree and not a square, and
/// w^2 = Delta mod 4 O_F.
struct CmFieldData {
  std::int64_t D;
  QuadElem delta;
  std::int64_t w0;
  std::int64_t w1;
  std::int64_t dtilde;

  std::int64_t u() const { return delta.u(); }
  std::int64_t v() const { return delta.v(); }
  QuadElem w() const { return QuadElem(D, w0, w1); }
  std::string label() const;
};

/// Every failed condition, in declaration order; empty iff admissible.
std::vector<FieldViolation> check_cm_field(std::int64_t D, const QuadElem& delta, std::int64_t w0, std::int64_t w1);

/// Throws CmFieldError listing every violated condition.
CmFieldData validate_cm_field(std::int64_t D, const QuadElem& delta, std::int64_t w0, std::int64_t w1);

/// Same checks with Delta = (u + v sqrt D)/2 given in raw coordinates. When D
/// is not 1 mod 4 no ring element can be formed, so only the D conditions are
/// reported. Throws std::invalid_argument if u != v mod 2.
std::vector<FieldViolation> check_cm_field_uv(std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0,
                                              std::int64_t w1);
CmFieldData validate_cm_field_uv(std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0, std::int64_t w1);

/// The unit eta generating the totally positive units of O_F.
QuadElem totally_positive_unit_generator(std::int64_t D);

/// Representative of {Delta * eta^k} with the smallest |trace|; among ties,
/// the one with the smaller v (then x). Used to enumerate fields without
/// unit-multiple repetition.
QuadElem canonical_delta(const QuadElem& delta);

}  // namespace cmint
