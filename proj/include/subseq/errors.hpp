#ifndef SUBSEQ_ERRORS_HPP
#define SUBSEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subseq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidCharacter : public Error {
public:
  explicit InvalidCharacter(std::size_t position)
      : Error("invalid character at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class EmptyPattern : public Error {
public:
  EmptyPattern() : Error("pattern must be non-empty") {}
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(int n, int cap, const std::string& why)
      : Error("enumeration budget exceeded: n=" + std::to_string(n) + " (cap " +
              std::to_string(cap) + ")" + (why.empty() ? "" : "; " + why)),
        n_(n), cap_(cap) {}
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

private:
  int n_;
  int cap_;
};

class OutOfStatedRange : public Error {
public:
  OutOfStatedRange(int n, int k)
      : Error("closed form for k=" + std::to_string(k) + " is not stated at n=" +
              std::to_string(n) + "; use the enumerated spectrum"),
        n_(n), k_(k) {}
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

private:
  int n_;
  int k_;
};

class PatternTooLong : public Error {
public:
  PatternTooLong(int length, int n)
      : Error("pattern of length " + std::to_string(length) +
              " does not fit in words of length " + std::to_string(n)) {}
};

class NotCovered : public Error {
public:
  explicit NotCovered(const std::string& pattern)
      : Error("no internal-zero prediction covers " + pattern +
              " (more than 3 runs); use raw mode") {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string& what)
      : Error("precondition violated: " + what) {}
};

} // namespace subseq

#endif // SUBSEQ_ERRORS_HPP
