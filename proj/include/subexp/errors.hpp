#pragma once

#include <stdexcept>
#include <string>

namespace subexp {

// Caller supplied something outside an operation's preconditions.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed interchange text; `line` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Honest refusal: the instance is outside the exact/exhaustive range of an operation.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No separation within the size budget was found.
class BudgetExceededError : public RefusalError {
public:
    BudgetExceededError(const std::string& what, int best_size)
        : RefusalError(what), best_size_(best_size) {}
    int best_size() const noexcept { return best_size_; }

private:
    int best_size_;
};

}  // namespace subexp
