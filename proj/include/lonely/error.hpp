#ifndef LONELY_ERROR_HPP
#define LONELY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lonely {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied a value outside an operation's domain.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A checked integer operation would have left the 64-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Reading or writing an external file or stream failed.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace lonely

#endif // LONELY_ERROR_HPP
