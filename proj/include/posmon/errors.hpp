#ifndef POSMON_ERRORS_HPP_
#define POSMON_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posmon {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text, word or signed word. Line and column are
  // 1-based; both are 0 when the input is a single word.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column);

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // An operation needing bounded equivalence classes was given a presentation
  // with a length-changing relation.
  class NonHomogeneous : public Error {
   public:
    NonHomogeneous();
  };

  // A closure or enumeration hit its cap. The question is undecided, which is
  // distinct from a negative answer.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t explored, std::size_t cap);

    std::size_t explored() const noexcept {
      return explored_;
    }
    std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t explored_;
    std::size_t cap_;
  };

  // A documented precondition does not hold (for instance group equality
  // asked for a presentation whose localization is not known to be
  // injective).
  class PreconditionViolated : public Error {
   public:
    using Error::Error;
  };

  class InjectivityNotEstablished : public PreconditionViolated {
   public:
    InjectivityNotEstablished();
  };

}  // namespace posmon

#endif  // POSMON_ERRORS_HPP_
