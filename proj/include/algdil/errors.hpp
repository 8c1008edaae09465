#pragma once

#include <stdexcept>
#include <string>

namespace algdil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

class NotIndependent : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The Andô builder was handed a pair with T*S != S*T.
class NotCommuting : public Error {
 public:
  using Error::Error;
};

/// ker G != ker H for the generator matrices. Unreachable for commuting input.
class WellDefinednessFailure : public Error {
 public:
  using Error::Error;
};

/// rank G != rank H, so the partial map cannot be extended to a bijection.
class ExtensionFailure : public Error {
 public:
  using Error::Error;
};

/// An operator image left the truncation it was supposed to land in.
class SupportOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidRecipe : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace algdil
