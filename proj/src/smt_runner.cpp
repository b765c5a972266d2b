#include "loopforge/smt_runner.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace loopforge {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat:
      return "sat";
    case SolveStatus::Unsat:
      return "unsat";
    case SolveStatus::Unknown:
      return "unknown";
    case SolveStatus::Timeout:
      return "timeout";
  }
  return "unknown";
}

std::string default_solver_command() {
  const char* env = std::getenv("LOOPFORGE_SOLVER");
  if (env && *env) return env;
  return "z3 -in";
}

namespace {

struct ChildResult {
  std::string out;
  bool timed_out = false;
};

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  ~Fd() { reset(); }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  int get() const { return fd_; }
  void reset(int fd = -1) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = fd;
  }

 private:
  int fd_;
};

void make_pipe(int fds[2]) {
  if (::pipe2(fds, O_CLOEXEC) != 0) throw Error(std::string("pipe: ") + std::strerror(errno));
}

ChildResult run_child(const std::vector<std::string>& argv, const std::string& input, double timeout_seconds,
                      const std::string& command) {
  int in_pipe[2], out_pipe[2], err_pipe[2];
  make_pipe(in_pipe);
  make_pipe(out_pipe);
  make_pipe(err_pipe);  // carries errno from a failed exec
  pid_t pid = ::fork();
  if (pid < 0) throw Error(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::dup2(in_pipe[0], 0);
    ::dup2(out_pipe[1], 1);
    ::dup2(out_pipe[1], 2);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    int e = errno;
    (void)!::write(err_pipe[1], &e, sizeof e);
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);
  Fd to_child(in_pipe[1]), from_child(out_pipe[0]), exec_status(err_pipe[0]);

  int exec_errno = 0;
  if (::read(exec_status.get(), &exec_errno, sizeof exec_errno) == sizeof exec_errno) {
    ::waitpid(pid, nullptr, 0);
    if (exec_errno == ENOENT || exec_errno == EACCES) throw SolverNotFound(command);
    throw Error("cannot start SMT solver '" + command + "': " + std::strerror(exec_errno));
  }

  ::fcntl(to_child.get(), F_SETFL, O_NONBLOCK);
  ::signal(SIGPIPE, SIG_IGN);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  ChildResult res;
  std::size_t written = 0;
  char buf[4096];
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      res.timed_out = true;
      break;
    }
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {from_child.get(), POLLIN, 0};
    if (to_child.get() >= 0) fds[count++] = {to_child.get(), POLLOUT, 0};
    int rc = ::poll(fds, count, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("poll: ") + std::strerror(errno));
    }
    if (count == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t w = ::write(to_child.get(), input.data() + written, input.size() - written);
      if (w > 0) written += static_cast<std::size_t>(w);
      if (w < 0 && errno != EAGAIN) written = input.size();
      if (written == input.size()) to_child.reset();
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      ssize_t r = ::read(from_child.get(), buf, sizeof buf);
      if (r > 0) {
        res.out.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0) {
        break;
      } else if (errno != EINTR) {
        break;
      }
    }
  }
  if (res.timed_out) ::kill(pid, SIGKILL);
  ::waitpid(pid, nullptr, 0);
  return res;
}

std::vector<std::string> split_command(const std::string& command) {
  std::istringstream in(command);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  if (out.empty()) throw Error("empty SMT solver command");
  return out;
}

}  // namespace

bool model_satisfies(const PolynomialSystem& system, const Assignment& model, std::string* failure) {
  std::vector<Rational> point;
  for (const auto& name : system.unknowns->names()) {
    auto it = model.find(name);
    if (it == model.end()) {
      if (failure) *failure = "model does not bind " + name;
      return false;
    }
    point.push_back(it->second);
  }
  for (std::size_t k = 0; k < system.equations.size(); ++k) {
    Rational v = system.equations[k].evaluate(point);
    if (v != 0) {
      if (failure) *failure = "equation " + std::to_string(k + 1) + " evaluates to " + to_string(v);
      return false;
    }
  }
  return true;
}

SolveOutcome run_smt(const SmtJob& job, const std::string& solver_command) {
  const std::string script = emit_smtlib(job);
  auto start = std::chrono::steady_clock::now();
  ChildResult child = run_child(split_command(solver_command), script, job.timeout_seconds, solver_command);
  SolveOutcome outcome;
  outcome.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.raw_output = child.out;
  if (child.timed_out) {
    outcome.status = SolveStatus::Timeout;
    return outcome;
  }
  std::istringstream lines(child.out);
  std::string line, rest;
  bool found = false;
  while (std::getline(lines, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::string word = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (word == "sat" || word == "unsat" || word == "unknown") {
      outcome.status = word == "sat" ? SolveStatus::Sat : word == "unsat" ? SolveStatus::Unsat : SolveStatus::Unknown;
      found = true;
      break;
    }
  }
  if (!found) throw MalformedModel("SMT solver gave no sat/unsat/unknown answer", child.out);
  if (outcome.status != SolveStatus::Sat) return outcome;
  std::string after((std::istreambuf_iterator<char>(lines)), std::istreambuf_iterator<char>());
  outcome.model = parse_model(after, job.system.unknowns);
  // Solvers may omit unconstrained symbols; any value works for them.
  for (const auto& name : job.system.unknowns->names()) outcome.model.emplace(name, Rational(0));
  std::string failure;
  if (!model_satisfies(job.system, outcome.model, &failure))
    throw MalformedModel("SMT model rejected by exact check: " + failure, child.out);
  return outcome;
}

}  // namespace loopforge
