#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sard {

/// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: empty facet, bad anchor set, wrong arity, unknown name.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A target value collides with a vertex value where a regular value is
/// required.  Carries the offending vertex ids.
class RegularValueViolation : public Error {
 public:
  RegularValueViolation(const std::string& msg, std::vector<int> vertices)
      : Error(msg), vertices_(std::move(vertices)) {}
  const std::vector<int>& offending_vertices() const { return vertices_; }

 private:
  std::vector<int> vertices_;
};

/// A function ties with a neighbour at a vertex where local injectivity is
/// required (index computations never tie-break silently).
class LocalInjectivityError : public Error {
 public:
  LocalInjectivityError(const std::string& msg, std::vector<int> vertices)
      : Error(msg), vertices_(std::move(vertices)) {}
  const std::vector<int>& offending_vertices() const { return vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Input failed a classification that an operation requires (e.g. a manifold
/// was expected).
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// A configured recursion, memo or branching budget was exhausted.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An operation needed a non-empty level set and got an empty one.
class EmptyLevelSetError : public Error {
 public:
  using Error::Error;
};

}  // namespace sard
