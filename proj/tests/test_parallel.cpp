#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cmint/parallel.hpp"

using namespace cmint;

TEST_CASE("parallel map keeps input order") {
  std::vector<int> in(1000);
  for (int i = 0; i < 1000; ++i) in[static_cast<std::size_t>(i)] = i;
  for (unsigned jobs : {1u, 2u, 7u, 64u}) {
    const auto out = parallel_map(in, [](int x) { return std::to_string(x * x); }, jobs);
    REQUIRE(out.size() == in.size());
    for (int i = 0; i < 1000; ++i) CHECK(out[static_cast<std::size_t>(i)] == std::to_string(i * i));
  }
  CHECK(parallel_map(std::vector<int>{}, [](int x) { return x; }, 4).empty());
}

TEST_CASE("parallel map rethrows worker failures") {
  std::vector<int> in = {1, 2, 3, 4, 5, 6};
  auto fn = [](int x) {
    if (x == 4) throw std::runtime_error("four");
    return x;
  };
  CHECK_THROWS_AS(parallel_map(in, fn, 3), std::runtime_error);
  CHECK_THROWS_AS(parallel_map(in, fn, 1), std::runtime_error);
}

TEST_CASE("worker count resolution") {
  CHECK(resolve_jobs(3) == 3);
  ::setenv("CMINT_JOBS", "5", 1);
  CHECK(resolve_jobs(0) == 5);
  CHECK(resolve_jobs(2) == 2);
  ::setenv("CMINT_JOBS", "garbage", 1);
  CHECK(resolve_jobs(0) == 1);
  ::unsetenv("CMINT_JOBS");
  CHECK(resolve_jobs(0) == 1);
}
