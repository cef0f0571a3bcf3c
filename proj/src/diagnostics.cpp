#include "cmint/diagnostics.hpp"

#include <cstdlib>
#include <mutex>

#include "cmint/parallel.hpp"

namespace cmint {

namespace {
std::mutex& sink_mutex() {
  static std::mutex mu;
  return mu;
}
std::function<void(const std::string&)>& sink_slot() {
  static std::function<void(const std::string&)> sink;
  return sink;
}
}  // namespace

void set_diagnostic_sink(std::function<void(const std::string&)> sink) {
  std::lock_guard lock(sink_mutex());
  sink_slot() = std::move(sink);
}

void diagnostic(const std::string& message) {
  std::lock_guard lock(sink_mutex());
  if (sink_slot()) sink_slot()(message);
}

unsigned resolve_jobs(int requested) {
  if (requested < 0) requested = 1;
  if (requested == 0) {
    if (const char* env = std::getenv("CMINT_JOBS")) requested = std::atoi(env);
  }
  if (requested <= 0) return 1;
  return static_cast<unsigned>(requested);
}

}  // namespace cmint
