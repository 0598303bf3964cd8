#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "steinitz/arith.hpp"
#include "steinitz/errors.hpp"

namespace steinitz::detail {

// Hand-rolled scanner shared by the recursive-descent parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail(what);
  }

  void expect(std::string_view word, const std::string& what) {
    if (!accept(word)) fail(what);
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  BigInt read_natural(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(what);
    return parse_bigint(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& detail = {}) const {
    throw ParseError(pos_, expected, detail);
  }

  [[noreturn]] void fail_at(std::size_t position, const std::string& expected, const std::string& detail = {}) const {
    throw ParseError(position, expected, detail);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace steinitz::detail
