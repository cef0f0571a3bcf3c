#include <doctest.h>

#include "cmint/diagnostics.hpp"
#include "cmint/enumerate.hpp"
#include "cmint/grosskeating.hpp"
#include "cmint/intersect.hpp"
#include "oracles.hpp"

using namespace cmint;

namespace {
std::vector<CmFieldData> sweep_fields(std::int64_t bound) {
  std::vector<CmFieldData> out;
  for (std::int64_t D : {5, 13, 17, 29}) {
    auto more = enumerate_fields(D, bound);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}
}  // namespace

TEST_CASE("Dtilde = 41: local data and intersection") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  const TMatrix t = build_tmatrix(cm, 1, 1);
  const LocalFactor f = local_factor(2, t, 2);
  CHECK(f.alpha == 3);
  CHECK(f.t == 1);
  CHECK(f.symbol == -1);
  CHECK(f.beta == 1);
  CHECK(beta_product(2, t) == 1);
  CHECK(intersection_at_p(cm, 2) == 1);
  CHECK(intersection_at_p(cm, 3) == 0);
  const auto total = intersection_total(cm);
  CHECK(total.coefficients == std::map<std::int64_t, Rational>{{2, 1}});
  CHECK(total.formal_sum() == "1·log 2");
  CHECK(b1_at_p(cm, 2) == 2);
  const auto data = reflex_local_data(cm, t, 2);
  REQUIRE(data.size() == 1);
  CHECK(data[0].in_ftilde == Splitting::kSplit);
  CHECK(data[0].in_ktilde == Splitting::kInert);
  CHECK(data[0].ord == 0);
}

TEST_CASE("Dtilde = 61: intersection supported at 3") {
  const auto cm = validate_cm_field_uv(5, -18, 4, 1, 0);
  const TMatrix t = build_tmatrix(cm, 1, 1);
  CHECK(alpha_unit(t, 3) == 4);
  CHECK(hilbert_symbol(-4, 3, 3) == -1);
  CHECK(intersection_total(cm).coefficients == std::map<std::int64_t, Rational>{{3, 1}});
  CHECK(b1_at_p(cm, 3) == 2);
}

TEST_CASE("the fifth cyclotomic field has empty intersection") {
  const auto cm = validate_cm_field_uv(5, -5, -1, 1, 1);
  CHECK(intersection_total(cm).empty());
  CHECK(intersection_total(cm).formal_sum() == "0");
}

TEST_CASE("local factor preconditions") {
  const auto cm = validate_cm_field_uv(5, -13, 1, 0, 1);
  const TMatrix t = build_tmatrix(cm, 1, 1);
  CHECK_THROWS_AS(local_factor(2, t, 3), std::invalid_argument);
  CHECK_THROWS_AS(beta_product(3, t), std::invalid_argument);
  CHECK_THROWS_AS(intersection_at_p(cm, 4), std::invalid_argument);
  CHECK_THROWS_AS(alpha_unit(TMatrix{1, 1, 6, 0, 9}, 3), std::logic_error);
}

TEST_CASE("rho factors") {
  CHECK(rho_local(Splitting::kRamified, 5) == 1);
  CHECK(rho_local(Splitting::kInert, 2) == 1);
  CHECK(rho_local(Splitting::kInert, 1) == 0);
  CHECK(rho_local(Splitting::kSplit, 3) == 4);
  CHECK(rho_local(Splitting::kSplit, -1) == 0);
}

TEST_CASE("main identity b1 = 2 * intersection over the sweep") {
  std::size_t checked = 0, nonzero = 0;
  for (const auto& cm : sweep_fields(2000)) {
    for (const auto& row : b1_comparison(cm)) {
      ++checked;
      if (row.coefficient != 0) ++nonzero;
      REQUIRE_MESSAGE(row.ok, cm.label(), " p=", row.p, " coeff=", to_string(row.coefficient), " b1=",
                      to_string(row.b1));
    }
  }
  CHECK(checked > 1000);
  CHECK(nonzero > 100);
}

TEST_CASE("coefficients are nonnegative half integers supported below Dtilde/(4D)") {
  for (const auto& cm : sweep_fields(2000)) {
    for (const auto& [p, c] : intersection_total(cm).coefficients) {
      CHECK(c > 0);
      CHECK(boost::multiprecision::denominator(Rational(2 * c)) == 1);
      CHECK(p <= cm.dtilde / (4 * cm.D));
    }
  }
}

TEST_CASE("vanishing below Dtilde = 8D") {
  std::size_t small = 0;
  for (const auto& cm : sweep_fields(8 * 29)) {
    if (cm.dtilde >= 8 * cm.D) continue;
    ++small;
    CHECK_MESSAGE(intersection_total(cm).empty(), cm.label());
  }
  CHECK(small > 0);
}

TEST_CASE("closed-form factors match the gated density formula") {
  std::size_t factors = 0;
  for (const auto& cm : sweep_fields(2000))
    for (const auto& t : all_tmatrices(cm))
      for (auto p : prime_divisors(t.reduced_det()))
        for (auto l : prime_divisors(t.reduced_det())) {
          const LocalFactor f = local_factor(p, t, l);
          CHECK(f.beta == gated_density_factor(p, f.alpha, f.t, l));
          ++factors;
        }
  CHECK(factors > 1000);
}

TEST_CASE("result does not depend on the worker count") {
  for (const auto& cm : sweep_fields(1200)) {
    const auto one = intersection_total(cm, 1);
    const auto many = intersection_total(cm, 4);
    CHECK(one.coefficients == many.coefficients);
  }
}

TEST_CASE("diagnostics reach the configured sink") {
  std::vector<std::string> notes;
  set_diagnostic_sink([&](const std::string& m) { notes.push_back(m); });
  // Sweep until a matrix with the prime D dividing det/4 is met.
  for (const auto& cm : sweep_fields(2000)) {
    for (const auto& t : all_tmatrices(cm))
      if (t.reduced_det() % cm.D == 0) {
        for (auto p : prime_divisors(t.reduced_det())) b_term(cm, t, p);
        break;
      }
    if (!notes.empty()) break;
  }
  set_diagnostic_sink(nullptr);
  CHECK_FALSE(notes.empty());
}
