#pragma once

#include <chrono>

namespace loopforge {

/// Installs a wall-clock budget for the current thread. Long-running
/// algebra (Buchberger, reductions, compositions) polls it through
/// check_deadline() and throws TimeLimitExceeded once it has passed.
/// Nested guards keep the tighter deadline.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::duration<double> budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::chrono::steady_clock::time_point previous_;
  bool had_previous_;
};

void check_deadline();

}  // namespace loopforge
