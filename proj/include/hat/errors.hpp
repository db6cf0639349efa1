#pragma once

#include <stdexcept>
#include <string>

namespace hat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class BadParity : public Error {
 public:
  using Error::Error;
};

// `which` names the violated relation, e.g. "t(r-1)=0".
class RelationFailed : public Error {
 public:
  explicit RelationFailed(std::string which)
      : Error("relation failed: " + which), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

class DegenerateGraph : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OrientationInconsistent : public Error {
 public:
  using Error::Error;
};

class NotAlternatingRegular : public Error {
 public:
  using Error::Error;
};

class NotTwoPath : public Error {
 public:
  using Error::Error;
};

class LengthOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnmatchedOrbit : public Error {
 public:
  using Error::Error;
};

class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hat
