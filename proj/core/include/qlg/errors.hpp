#pragma once

#include <stdexcept>
#include <string>

namespace qlg {

// Base of every error raised by the library. kind() is a stable token that
// the command line front end copies into its error report.
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define QLG_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}       \
  };

QLG_DEFINE_ERROR(NotInvolution)
QLG_DEFINE_ERROR(DomainError)
QLG_DEFINE_ERROR(InvalidParity)
QLG_DEFINE_ERROR(BudgetExceeded)
QLG_DEFINE_ERROR(NoRoot)
QLG_DEFINE_ERROR(BadAxis)
QLG_DEFINE_ERROR(ConstraintViolated)

#undef QLG_DEFINE_ERROR

}  // namespace qlg
