#pragma once

#include <stdexcept>
#include <string>

namespace cohiggs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COHIGGS_ERROR(Name)              \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

COHIGGS_ERROR(ContainmentViolation);
COHIGGS_ERROR(GradingMismatch);
COHIGGS_ERROR(IntegralityError);
COHIGGS_ERROR(RankUnsupported);
COHIGGS_ERROR(InconsistentData);
COHIGGS_ERROR(ZeroSection);
COHIGGS_ERROR(InvalidSection);
COHIGGS_ERROR(NotIntegrable);
COHIGGS_ERROR(NotStable);
COHIGGS_ERROR(DomainError);
COHIGGS_ERROR(ChaseUnresolved);
COHIGGS_ERROR(RouteDisagreement);
COHIGGS_ERROR(ZeroConic);
COHIGGS_ERROR(SingularConic);
COHIGGS_ERROR(RankExceedsSource);
COHIGGS_ERROR(NotSimpleTensor);

#undef COHIGGS_ERROR

/// Malformed polynomial literal; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Two terms of a parsed polynomial disagree on their (bi)degree.
class NonHomogeneous : public Error {
 public:
  NonHomogeneous(std::string first, std::string second)
      : Error("non-homogeneous polynomial: degrees " + first + " and " + second),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& first_degree() const { return first_; }
  const std::string& second_degree() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace cohiggs
