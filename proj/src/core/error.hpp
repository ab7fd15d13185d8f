#ifndef TORLINK_ERROR_HPP
#define TORLINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace torlink {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (map files, polynomial strings, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid data (broken involution, Euler characteristic != 0,
// disconnected graph where connectivity is required, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace torlink

#endif
