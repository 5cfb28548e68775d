#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gelfand {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: cycle strings, group files, pair specs.
class ParseError : public Error {
 public:
  using Error::Error;
};

class EnumerationOverflow : public Error {
 public:
  EnumerationOverflow(std::size_t partial, std::size_t cap)
      : Error("group enumeration exceeded cap " + std::to_string(cap) +
              " (enumerated " + std::to_string(partial) + " elements)"),
        partial_count(partial),
        cap(cap) {}

  std::size_t partial_count;
  std::size_t cap;
};

// A quantity that must be a (nonnegative) integer was not.
class IntegralityError : public Error {
 public:
  IntegralityError(const std::string& what, double re, double im)
      : Error(what + ": value " + std::to_string(re) + (im < 0 ? " - " : " + ") +
              std::to_string(im < 0 ? -im : im) + "i is not an integer"),
        re(re),
        im(im) {}

  double re;
  double im;
};

// A theoretical identity failed; indicates a bug or inconsistent input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A verification run found a failing check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gelfand
