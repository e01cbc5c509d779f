#include "nmval/errors.hpp"

namespace nmval {

namespace {

std::string parse_message(std::size_t column, const std::vector<std::string>& expected,
                          const std::string& found) {
  std::string msg = "syntax error at column " + std::to_string(column) + ": expected one of {";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  msg += "}, found " + found;
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error(parse_message(column, expected, found)),
      column_(column),
      expected_(std::move(expected)) {}

ResourceError::ResourceError(std::size_t cap, std::size_t attained)
    : std::runtime_error("element cap " + std::to_string(cap) + " exceeded: closure reached " +
                         std::to_string(attained) + " elements"),
      cap_(cap),
      attained_(attained) {}

ResourceError::ResourceError(const std::string& message) : std::runtime_error(message), cap_(0), attained_(0) {}

}  // namespace nmval
