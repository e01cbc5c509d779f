#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmval {

/// Malformed formula text. Carries the 1-based column of the offending
/// token and the set of tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found);

  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Well-formed input that cannot be interpreted: missing bindings, values
/// outside the carrier, variables beyond the arity of an algebra, ...
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A free-algebra build grew past its element cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::size_t cap, std::size_t attained);
  explicit ResourceError(const std::string& message);

  std::size_t cap() const { return cap_; }
  std::size_t attained() const { return attained_; }

 private:
  std::size_t cap_;
  std::size_t attained_;
};

}  // namespace nmval
