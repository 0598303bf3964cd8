#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steinitz {

// Malformed textual input. Carries the byte offset of the offending token
// and a description of what the grammar expected there.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& detail = {})
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": expected " + expected +
                              (detail.empty() ? "" : " (" + detail + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace steinitz
