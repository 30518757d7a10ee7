#pragma once

#include <stdexcept>
#include <string>

namespace nilmult {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleParams : public Error {
 public:
  using Error::Error;
};

class NotInGamma3 : public Error {
 public:
  using Error::Error;
};

class InfiniteQuotient : public Error {
 public:
  using Error::Error;
};

class NotClassTwo : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilmult
