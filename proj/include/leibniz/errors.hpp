#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A subspace expected to contain another does not.
class NotContained : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotLeibniz : public Error {
 public:
  using Error::Error;
};

class NotLie : public Error {
 public:
  using Error::Error;
};

class NotFiliform : public Error {
 public:
  using Error::Error;
};

/// Family parameters violate the constraints of a catalog constructor.
class BadParams : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class IndexOutOfFamilyRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A one-parameter basis change has identically vanishing determinant.
class SingularFamily : public Error {
 public:
  using Error::Error;
};

/// Structure constants of a parameterized algebra that blow up at t = 0.
/// Entries are 0-based (i, j, k) triples for [x_i, x_j] -> x_k.
class PoleAtZero : public Error {
 public:
  PoleAtZero(std::string what, std::vector<std::array<std::size_t, 3>> entries)
      : Error(std::move(what)), entries_(std::move(entries)) {}

  const std::vector<std::array<std::size_t, 3>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::array<std::size_t, 3>> entries_;
};

}  // namespace leibniz
