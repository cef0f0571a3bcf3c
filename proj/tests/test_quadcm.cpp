#include <doctest.h>

#include <algorithm>

#include "cmint/quadcm.hpp"
#include "oracles.hpp"

using namespace cmint;

namespace {
bool has(const std::vector<FieldViolation>& vs, FieldViolation v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}
}  // namespace

TEST_CASE("coordinates and basic arithmetic") {
  const QuadElem delta = QuadElem::from_uv(5, -13, 1);
  CHECK(delta.x() == -9);
  CHECK(delta.y() == 1);
  CHECK(delta.norm() == 41);
  CHECK(delta.trace() == -13);
  CHECK(delta.is_totally_negative());
  CHECK(delta.conj() == QuadElem::from_uv(5, -13, -1));
  const QuadElem omega(5, 0, 1);
  CHECK(omega * omega == QuadElem(5, -5, 5));  // omega^2 = 5 omega - 5
  CHECK_THROWS_AS(QuadElem::from_uv(5, -13, 2), std::invalid_argument);
  CHECK_THROWS_AS(QuadElem(6, 1, 1), std::invalid_argument);
  CHECK_THROWS(QuadElem(5, 1, 0) + QuadElem(13, 1, 0));
}

TEST_CASE("ring identities on random elements") {
  gen::Source src(5);
  for (std::int64_t D : {5, 13, 17, 29, 37}) {
    for (int i = 0; i < 200; ++i) {
      const QuadElem a(D, src.integer(-50, 50), src.integer(-50, 50));
      const QuadElem b(D, src.integer(-50, 50), src.integer(-50, 50));
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
      CHECK((a + b).trace() == a.trace() + b.trace());
      CHECK(a * a.conj() == QuadElem(D, a.norm(), 0));
      CHECK(a + a.conj() == QuadElem(D, a.trace(), 0));
      // 4 Norm = u^2 - D v^2.
      CHECK(4 * a.norm() == a.u() * a.u() - D * a.v() * a.v());
    }
  }
}

TEST_CASE("admissible field D = 5, Dtilde = 41") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  CHECK(cm.dtilde == 41);
  CHECK(check_cm_field(5, QuadElem::from_uv(5, -13, 1), 0, 1).empty());
}

TEST_CASE("admissible field D = 5, Dtilde = 61") {
  const auto cm = validate_cm_field_uv(5, -18, 4, 1, 0);
  CHECK(cm.dtilde == 61);
  CHECK(cm.delta.x() == -19);
  CHECK(cm.delta.y() == 4);
}

TEST_CASE("the cyclotomic field of fifth roots of unity") {
  const auto cm = validate_cm_field_uv(5, -5, -1, 1, 1);
  CHECK(cm.dtilde == 5);
}

TEST_CASE("each violated condition is reported") {
  CHECK(has(check_cm_field_uv(5, -13, 1, 0, 0), FieldViolation::kCongruenceFails));
  const auto d6 = check_cm_field_uv(6, -13, 1, 0, 1);
  CHECK(has(d6, FieldViolation::kDNotPrime));
  CHECK(has(d6, FieldViolation::kDNotOneModFour));
  CHECK(has(check_cm_field_uv(21, -13, 1, 0, 1), FieldViolation::kDNotPrime));
  CHECK(has(check_cm_field_uv(5, 13, 1, 0, 1), FieldViolation::kDeltaNotTotallyNegative));
  CHECK(has(check_cm_field_uv(5, -1, 1, 0, 1), FieldViolation::kDeltaNotTotallyNegative));
  // Norm 9, a square and 1 mod 4 ... (u, v) = (-6, 0) has norm 9.
  const auto square = check_cm_field_uv(5, -6, 0, 0, 0);
  CHECK(has(square, FieldViolation::kDtildeIsSquare));
  // Norm(( -12 + 2 sqrt 5)/2) = (144 - 20)/4 = 31, which is 3 mod 4.
  CHECK(has(check_cm_field_uv(5, -12, 2, 0, 0), FieldViolation::kDtildeNotOneModFour));
  // Norm((-22 + 4 sqrt 5)/2) = (484 - 80)/4 = 101 is fine; 9 * 5 = 45 (u, v) = (-15, 3): (225 - 45)/4 = 45.
  CHECK(has(check_cm_field_uv(5, -15, 3, 1, 1), FieldViolation::kDtildeNotSquarefree));
  CHECK_THROWS_AS(validate_cm_field_uv(5, -13, 1, 0, 0), CmFieldError);
  CHECK_THROWS_AS(check_cm_field_uv(5, -13, 2, 0, 0), std::invalid_argument);
  try {
    validate_cm_field_uv(6, -13, 1, 0, 1);
  } catch (const CmFieldError& e) {
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("violation codes are distinct") {
  std::vector<std::string> codes;
  for (auto v : {FieldViolation::kDNotPrime, FieldViolation::kDNotOneModFour, FieldViolation::kDeltaContextMismatch,
                 FieldViolation::kDeltaNotTotallyNegative, FieldViolation::kDtildeNotOneModFour,
                 FieldViolation::kDtildeNotSquarefree, FieldViolation::kDtildeIsSquare,
                 FieldViolation::kCongruenceFails}) {
    codes.push_back(code(v));
    CHECK_FALSE(describe(v).empty());
  }
  std::sort(codes.begin(), codes.end());
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("totally positive unit generators") {
  CHECK(totally_positive_unit_generator(5) == QuadElem::from_uv(5, 3, 1));     // (3 + sqrt 5)/2
  CHECK(totally_positive_unit_generator(13) == QuadElem::from_uv(13, 11, 3));  // ((3 + sqrt 13)/2)^2
  CHECK(totally_positive_unit_generator(17) == QuadElem::from_uv(17, 66, 16)); // (4 + sqrt 17)^2
  for (std::int64_t D : {5, 13, 17, 29, 37, 41, 53}) {
    const auto eta = totally_positive_unit_generator(D);
    CHECK(eta.norm() == 1);
    CHECK(eta.is_totally_positive());
  }
}

TEST_CASE("canonical representative is constant on unit orbits") {
  gen::Source src(99);
  for (std::int64_t D : {5, 13, 17, 29}) {
    const QuadElem eta = totally_positive_unit_generator(D);
    for (int i = 0; i < 100; ++i) {
      QuadElem delta(D, src.integer(-60, 60), src.integer(-20, 20));
      if (!delta.is_totally_negative()) continue;
      const QuadElem canon = canonical_delta(delta);
      CHECK(canon.norm() == delta.norm());
      CHECK(canon.is_totally_negative());
      CHECK(canonical_delta(delta * eta) == canon);
      CHECK(canonical_delta(delta * eta.conj()) == canon);
      CHECK(canonical_delta(canon) == canon);
      CHECK(std::abs(canon.trace()) <= std::abs(delta.trace()));
    }
  }
}
