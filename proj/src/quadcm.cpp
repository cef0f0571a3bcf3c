#include "cmint/quadcm.hpp"

#include <sstream>

#include "cmint/exactnum.hpp"

namespace cmint {

namespace {

std::int64_t omega_norm(std::int64_t D) { return (D * D - D) / 4; }

void require_same_context(const QuadElem& a, const QuadElem& b) {
  if (a.discriminant() != b.discriminant())
    throw std::invalid_argument("QuadElem: mixed discriminants " + std::to_string(a.discriminant()) + " and " +
                                std::to_string(b.discriminant()));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

QuadElem::QuadElem(std::int64_t D, std::int64_t x, std::int64_t y) : D_(D), x_(x), y_(y) {
  if (D <= 0 || floor_mod(D, 4) != 1) throw std::invalid_argument("QuadElem: D must be positive and 1 mod 4");
}

QuadElem QuadElem::from_uv(std::int64_t D, std::int64_t u, std::int64_t v) {
  if (floor_mod(u - v, 2) != 0) throw std::invalid_argument("QuadElem: (u + v sqrt D)/2 needs u = v mod 2");
  // u - vD is even because D is odd and u = v mod 2.
  return QuadElem(D, (u - v * D) / 2, v);
}

QuadElem QuadElem::conj() const { return QuadElem(D_, x_ + y_ * D_, -y_); }

std::int64_t QuadElem::norm() const { return x_ * x_ + D_ * x_ * y_ + y_ * y_ * omega_norm(D_); }

bool QuadElem::is_totally_negative() const {
  const std::int64_t uu = u();
  return uu < 0 && uu * uu > y_ * y_ * D_;
}

bool QuadElem::is_totally_positive() const {
  const std::int64_t uu = u();
  return uu > 0 && uu * uu > y_ * y_ * D_;
}

bool QuadElem::divisible_by(std::int64_t m) const { return x_ % m == 0 && y_ % m == 0; }

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  require_same_context(a, b);
  return QuadElem(a.D_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  require_same_context(a, b);
  return QuadElem(a.D_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  require_same_context(a, b);
  // omega^2 = D*omega - (D^2 - D)/4
  const std::int64_t yy = a.y_ * b.y_;
  return QuadElem(a.D_, a.x_ * b.x_ - yy * omega_norm(a.D_), a.x_ * b.y_ + a.y_ * b.x_ + yy * a.D_);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e) {
  return os << "(" << e.u() << (e.v() < 0 ? "-" : "+") << (e.v() < 0 ? -e.v() : e.v()) << "*sqrt(" << e.discriminant()
            << "))/2";
}

std::string describe(FieldViolation v) {
  switch (v) {
    case FieldViolation::kDNotPrime: return "D is not prime";
    case FieldViolation::kDNotOneModFour: return "D is not 1 mod 4";
    case FieldViolation::kDeltaContextMismatch: return "Delta is not an element of Q(sqrt D) for this D";
    case FieldViolation::kDeltaNotTotallyNegative: return "Delta is not totally negative";
    case FieldViolation::kDtildeNotOneModFour: return "Dtilde = Norm(Delta) is not 1 mod 4";
    case FieldViolation::kDtildeNotSquarefree: return "Dtilde = Norm(Delta) is not squarefree";
    case FieldViolation::kDtildeIsSquare: return "Dtilde is a perfect square (K is biquadratic)";
    case FieldViolation::kCongruenceFails: return "w^2 is not congruent to Delta mod 4 O_F";
  }
  return "unknown";
}

std::string code(FieldViolation v) {
  switch (v) {
    case FieldViolation::kDNotPrime: return "D_NOT_PRIME";
    case FieldViolation::kDNotOneModFour: return "D_NOT_1_MOD_4";
    case FieldViolation::kDeltaContextMismatch: return "DELTA_CONTEXT";
    case FieldViolation::kDeltaNotTotallyNegative: return "DELTA_NOT_TOTALLY_NEGATIVE";
    case FieldViolation::kDtildeNotOneModFour: return "DTILDE_NOT_1_MOD_4";
    case FieldViolation::kDtildeNotSquarefree: return "DTILDE_NOT_SQUAREFREE";
    case FieldViolation::kDtildeIsSquare: return "DTILDE_SQUARE";
    case FieldViolation::kCongruenceFails: return "W_CONGRUENCE";
  }
  return "UNKNOWN";
}

namespace {
std::string join_violations(const std::vector<FieldViolation>& vs) {
  std::string out = "inadmissible CM field:";
  for (auto v : vs) out += " [" + describe(v) + "]";
  return out;
}
}  // namespace

CmFieldError::CmFieldError(std::vector<FieldViolation> violations)
    : std::domain_error(join_violations(violations)), violations_(std::move(violations)) {}

std::string CmFieldData::label() const {
  std::ostringstream os;
  os << "D=" << D << " Delta=" << delta << " w=(" << w0 << "," << w1 << ") Dtilde=" << dtilde;
  return os.str();
}

std::vector<FieldViolation> check_cm_field(std::int64_t D, const QuadElem& delta, std::int64_t w0, std::int64_t w1) {
  std::vector<FieldViolation> out;
  if (!is_prime(D)) out.push_back(FieldViolation::kDNotPrime);
  if (floor_mod(D, 4) != 1) out.push_back(FieldViolation::kDNotOneModFour);
  if (delta.discriminant() != D) {
    out.push_back(FieldViolation::kDeltaContextMismatch);
    return out;
  }
  if (!delta.is_totally_negative()) out.push_back(FieldViolation::kDeltaNotTotallyNegative);
  const std::int64_t dt = delta.norm();
  if (floor_mod(dt, 4) != 1) out.push_back(FieldViolation::kDtildeNotOneModFour);
  if (dt <= 0 || !is_squarefree(dt)) out.push_back(FieldViolation::kDtildeNotSquarefree);
  if (dt >= 0 && is_perfect_square(dt)) out.push_back(FieldViolation::kDtildeIsSquare);
  const QuadElem w(D, w0, w1);
  if (!(w * w - delta).divisible_by(4)) out.push_back(FieldViolation::kCongruenceFails);
  return out;
}

CmFieldData validate_cm_field(std::int64_t D, const QuadElem& delta, std::int64_t w0, std::int64_t w1) {
  auto violations = check_cm_field(D, delta, w0, w1);
  if (!violations.empty()) throw CmFieldError(std::move(violations));
  return CmFieldData{D, delta, w0, w1, delta.norm()};
}

std::vector<FieldViolation> check_cm_field_uv(std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0,
                                              std::int64_t w1) {
  if (floor_mod(u - v, 2) != 0) throw std::invalid_argument("Delta = (u + v sqrt D)/2 needs u = v mod 2");
  if (D <= 0 || floor_mod(D, 4) != 1) {
    std::vector<FieldViolation> out;
    if (!is_prime(D)) out.push_back(FieldViolation::kDNotPrime);
    out.push_back(FieldViolation::kDNotOneModFour);
    return out;
  }
  return check_cm_field(D, QuadElem::from_uv(D, u, v), w0, w1);
}

CmFieldData validate_cm_field_uv(std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0, std::int64_t w1) {
  auto violations = check_cm_field_uv(D, u, v, w0, w1);
  if (!violations.empty()) throw CmFieldError(std::move(violations));
  const QuadElem delta = QuadElem::from_uv(D, u, v);
  return CmFieldData{D, delta, w0, w1, delta.norm()};
}

QuadElem totally_positive_unit_generator(std::int64_t D) {
  // Fundamental unit (x + y sqrt D)/2 with x^2 - D y^2 = +-4, smallest y >= 1.
  for (std::int64_t y = 1;; ++y) {
    for (std::int64_t sign : {-4, 4}) {
      const std::int64_t x2 = D * y * y + sign;
      if (x2 > 0 && is_perfect_square(x2)) {
        const QuadElem eps = QuadElem::from_uv(D, isqrt(x2), y);
        return eps.norm() == 1 ? eps : eps * eps;
      }
    }
  }
}

QuadElem canonical_delta(const QuadElem& delta) {
  const QuadElem eta = totally_positive_unit_generator(delta.discriminant());
  const QuadElem eta_inv = eta.conj();  // norm 1
  const auto abs_trace = [](const QuadElem& e) { return e.u() < 0 ? -e.u() : e.u(); };
  // For totally definite Delta, |trace(Delta eta^k)| is strictly convex in k.
  QuadElem cur = delta;
  while (abs_trace(cur * eta) < abs_trace(cur)) cur = cur * eta;
  while (abs_trace(cur * eta_inv) < abs_trace(cur)) cur = cur * eta_inv;
  QuadElem best = cur;
  for (const QuadElem& n : {cur * eta, cur * eta_inv}) {
    if (abs_trace(n) != abs_trace(cur)) continue;
    if (n.v() < best.v() || (n.v() == best.v() && n.x() < best.x())) best = n;
  }
  return best;
}

}  // namespace cmint
