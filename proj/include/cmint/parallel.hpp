#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cmint {

/// Worker count: a positive request wins; zero defers to the CMINT_JOBS
/// environment variable, then to 1.
unsigned resolve_jobs(int requested);

/// out[i] = fn(in[i]) using up to `jobs` threads. Results keep input order;
/// the first exception thrown by any worker is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned jobs) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out;
  out.reserve(in.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(in.size())));
  if (jobs <= 1) {
    for (const auto& x : in) out.push_back(fn(x));
    return out;
  }
  // Slots allow result types without a default constructor.
  std::vector<std::optional<Out>> slots(in.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < in.size(); i = next++) {
          try {
            slots[i].emplace(fn(in[i]));
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace cmint
