#include <doctest.h>

#include <algorithm>

#include "cmint/enumerate.hpp"
#include "cmint/tmatrix.hpp"
#include "oracles.hpp"

using namespace cmint;

TEST_CASE("matrix of the Dtilde = 41 field") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  const auto adm = admissible_n(cm);
  REQUIRE(adm.size() == 1);
  CHECK(adm[0].n == 1);
  CHECK(adm[0].mus == std::vector<int>{1});
  CHECK(adm[0].reduced_det == 2);
  const TMatrix t = build_tmatrix(cm, 1, 1);
  CHECK(t == TMatrix{1, 1, 24, -8, 3});
  CHECK(t.det() == 8);
  CHECK(tmatrix_violations(cm, t).empty());
  CHECK(reconstruct_delta(cm, t) == cm.delta);
}

TEST_CASE("matrix of the Dtilde = 61 field") {
  const auto cm = validate_cm_field_uv(5, -18, 4, 1, 0);
  const auto all = all_tmatrices(cm);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == TMatrix{1, 1, 39, -12, 4});
  CHECK(all[0].det() == 12);
  CHECK(all[0].reduced_det() == 3);
}

TEST_CASE("no matrices below Dtilde = 4D") {
  const auto cm = validate_cm_field_uv(5, -5, -1, 1, 1);
  CHECK(admissible_n(cm).empty());
}

TEST_CASE("inadmissible n is rejected") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  CHECK_THROWS_AS(build_tmatrix(cm, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_tmatrix(cm, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(build_tmatrix(cm, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_tmatrix(cm, 0, 1), std::invalid_argument);
}

TEST_CASE("a corrupted matrix reports its violations") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  TMatrix t = build_tmatrix(cm, 1, 1);
  t.a += 1;
  CHECK_FALSE(tmatrix_violations(cm, t).empty());
}

TEST_CASE("matrices agree with a direct search and satisfy the structural invariants") {
  std::size_t fields = 0, matrices = 0;
  for (std::int64_t D : {5, 13, 17, 29}) {
    for (const auto& cm : enumerate_fields(D, 2000)) {
      ++fields;
      std::set<std::tuple<std::int64_t, int, std::int64_t, std::int64_t, std::int64_t>> lib;
      for (const auto& t : all_tmatrices(cm)) {
        ++matrices;
        lib.emplace(t.n, t.mu, t.a, t.b, t.c);
        const auto violations = tmatrix_violations(cm, t);
        CHECK_MESSAGE(violations.empty(), cm.label(), " n=", t.n, " mu=", t.mu);
        CHECK(reconstruct_delta(cm, t) == cm.delta);
        CHECK(t.det() == (cm.dtilde - t.n * t.n) / cm.D);
        CHECK(has_unit_dyadic_shape(t));
      }
      CHECK_MESSAGE(lib == oracle::tmatrices_by_search(cm.D, cm.u(), cm.v(), cm.dtilde), cm.label());
    }
  }
  CHECK(fields > 400);
  CHECK(matrices > 1000);
}

TEST_CASE("both signs occur exactly when D divides n") {
  for (const auto& cm : enumerate_fields(13, 2000))
    for (const auto& adm : admissible_n(cm)) CHECK(adm.mus.size() == (adm.n % cm.D == 0 ? 2u : 1u));
}

TEST_CASE("diagonal 0, -1 mod 4 holds for Delta or for its conjugate") {
  std::size_t literal = 0, twisted = 0;
  for (std::int64_t D : {5, 13, 17, 29}) {
    for (const auto& cm : enumerate_fields(D, 2000)) {
      const auto ts = all_tmatrices(cm);
      if (ts.empty()) continue;
      const auto count = std::count_if(ts.begin(), ts.end(), has_diagonal_zero_minus_one);
      // Uniform across the matrices of one field.
      CHECK((count == 0 || count == static_cast<std::ptrdiff_t>(ts.size())));
      if (count > 0) {
        ++literal;
        continue;
      }
      ++twisted;
      const QuadElem wc = cm.w().conj();
      const auto conj = validate_cm_field(D, cm.delta.conj(), oracle::mod(wc.x(), 2), oracle::mod(wc.y(), 2));
      for (const auto& t : all_tmatrices(conj)) CHECK(has_diagonal_zero_minus_one(t));
      for (const auto& t : ts) {
        CHECK(oracle::mod(t.a, 4) == 3);
        CHECK(oracle::mod(t.c, 4) == 3);
        CHECK(oracle::mod(t.b, 2) == 1);
      }
    }
  }
  CHECK(literal > 0);
  CHECK(twisted > 0);
}

TEST_CASE("worked example of the twisted shape") {
  const auto cm = validate_cm_field_uv(5, -13, -1, 1, 1);
  const TMatrix t = build_tmatrix(cm, 1, 1);
  CHECK(t == TMatrix{1, 1, 19, -7, 3});
  CHECK_FALSE(has_diagonal_zero_minus_one(t));
  CHECK(has_unit_dyadic_shape(t));
  CHECK(tmatrix_violations(cm, t).empty());
}
