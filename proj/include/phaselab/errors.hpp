#pragma once

#include <stdexcept>
#include <string>

namespace phaselab {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A symbol outside 1..k, or a word paired with the wrong alphabet.
class InvalidWordError : public Error {
public:
  using Error::Error;
};

// An enumeration or counting request above the configured cap.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

// Operation requested on a language that does not support it.
class UnsupportedOperationError : public Error {
public:
  using Error::Error;
};

class AlphabetMismatchError : public Error {
public:
  using Error::Error;
};

// A bijection was queried outside its constructed coverage window.
class CoverageError : public Error {
public:
  using Error::Error;
};

// A back-and-forth chain failed to terminate within the step budget.
class ConstructionError : public Error {
public:
  using Error::Error;
};

class UndefinedFractionError : public Error {
public:
  using Error::Error;
};

class InsufficientDataError : public Error {
public:
  using Error::Error;
};

class NotApplicableError : public Error {
public:
  using Error::Error;
};

class NoPredictionError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace phaselab
