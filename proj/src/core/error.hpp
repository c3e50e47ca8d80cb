#pragma once

#include <stdexcept>
#include <string>

namespace nfgd {

enum class ErrorKind {
  kValidation,
  kShape,
  kParse,
  kPrecondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nfgd
