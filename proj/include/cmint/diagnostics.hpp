#pragma once

#include <functional>
#include <string>

namespace cmint {

/// Receives notes about rarely exercised code paths. No sink by default.
void set_diagnostic_sink(std::function<void(const std::string&)> sink);
void diagnostic(const std::string& message);

}  // namespace cmint
