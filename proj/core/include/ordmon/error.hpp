#ifndef ORDMON_ERROR_HPP_
#define ORDMON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordmon {

  //! Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An operation was applied outside its domain, e.g. subtracting a larger
  //! ordinal, or building an element whose coordinates exceed the bound.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Two values from different monoids were combined.
  class ContextMismatch : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

}  // namespace ordmon

#endif  // ORDMON_ERROR_HPP_
