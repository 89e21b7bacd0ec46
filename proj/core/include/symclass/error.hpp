#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symclass {

// Invalid parameter, unsupported tensor order, empty input and similar
// validation failures.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed space expression or class name. `offset` is a byte offset into
// the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// The numeric oracle found something it cannot explain: an unclassifiable
// rotation set, a broken closure, or a class outside the clips table.
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace symclass
