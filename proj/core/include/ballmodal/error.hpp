#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballmodal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formula text could not be parsed.  `offset` is the byte offset of the
// offending token; `expected` lists what would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Malformed model, frame or proof documents, unknown worlds or variables,
// out-of-fragment formulas.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured cap on valuations, frames or wall-clock time was hit.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ballmodal
