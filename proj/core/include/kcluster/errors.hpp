#ifndef KCLUSTER_ERRORS_HPP
#define KCLUSTER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace kcluster {

// Instance text could not be parsed. `line` is the 1-based physical line
// number in the input document.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line)
        : std::runtime_error(std::move(msg)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A realization handed to the proper-interval pipeline contains a strict
// containment. `witness()` is a pair of 1-based input indices (container,
// contained).
class NotProperError : public std::runtime_error {
public:
    NotProperError(std::string msg, int container, int contained)
        : std::runtime_error(std::move(msg)),
          witness_(container, contained) {}
    std::pair<int, int> witness() const { return witness_; }

private:
    std::pair<int, int> witness_;
};

class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its configured budget. The caller
// must either raise the budget or skip; nothing is ever approximated.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kcluster

#endif // KCLUSTER_ERRORS_HPP
