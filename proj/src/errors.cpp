#include "posmon/errors.hpp"

namespace posmon {

  namespace {
    std::string located(std::string const& msg,
                        std::size_t        line,
                        std::size_t        column) {
      if (line == 0) {
        return msg;
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + msg;
    }
  }  // namespace

  ParseError::ParseError(std::string const& msg,
                         std::size_t        line,
                         std::size_t        column)
      : Error(located(msg, line, column)), line_(line), column_(column) {}

  NonHomogeneous::NonHomogeneous()
      : Error("the presentation is not homogeneous, equivalence classes may be "
              "unbounded") {}

  CapExceeded::CapExceeded(std::string const& what,
                           std::size_t        explored,
                           std::size_t        cap)
      : Error(what + ": cap of " + std::to_string(cap) + " exceeded after "
              + std::to_string(explored) + " items (undecided)"),
        explored_(explored),
        cap_(cap) {}

  InjectivityNotEstablished::InjectivityNotEstablished()
      : PreconditionViolated(
          "injectivity of the localization is not established: the "
          "presentation is not proven cancellative and has cancellation "
          "failures within the checked bound (pass assume_injective to "
          "override)") {}

}  // namespace posmon
