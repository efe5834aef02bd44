#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circuitpack {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A search ran out of its node allowance. Never a wrong answer: callers get
// this instead of an unproven result.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("search budget exceeded: " + what) {}
};

// Input violates an operation's precondition (non-special arc, non-perfect
// matching, size guard, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Node allowance for one exact search. The default comes from the
// CIRCUITPACK_BUDGET environment variable when set.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultNodes = 200'000'000;

  Budget() : limit_(default_limit()) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  static std::uint64_t default_limit();

  void tick(const char* where, std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(where);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace circuitpack
