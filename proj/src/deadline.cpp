#include "loopforge/deadline.hpp"

#include "loopforge/error.hpp"

namespace loopforge {
namespace {

thread_local bool t_active = false;
thread_local std::chrono::steady_clock::time_point t_deadline;

}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::duration<double> budget)
    : previous_(t_deadline), had_previous_(t_active) {
  auto mine = std::chrono::steady_clock::now() +
              std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
  if (!t_active || mine < t_deadline) t_deadline = mine;
  t_active = true;
}

ScopedDeadline::~ScopedDeadline() {
  t_deadline = previous_;
  t_active = had_previous_;
}

void check_deadline() {
  if (t_active && std::chrono::steady_clock::now() > t_deadline) throw TimeLimitExceeded();
}

}  // namespace loopforge
