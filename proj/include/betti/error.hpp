#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Exit-code conventions shared by the library and the CLI:
//   2 input error, 3 sampling exhaustion, 4 budget exceeded,
//   5 internal assertion (a formula mismatch is always a bug).
class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(2, what) {}
};

class SamplingError : public Error {
 public:
  explicit SamplingError(const std::string& what) : Error(3, what) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(4, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(5, what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace betti
