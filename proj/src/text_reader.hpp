#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "tumax/error.hpp"
#include "tumax/checked.hpp"

namespace tumax::detail {

// Whitespace-separated integer reader that tracks 1-based line/column
// positions for diagnostics.
class TextReader {
 public:
  explicit TextReader(std::string_view text) : text_(text) {}

  void skip_blank_lines() { skip(true); }

  bool at_end() {
    skip(true);
    return pos_ >= text_.size();
  }

  Int read_int(const char* what) {
    skip(false);
    if (pos_ >= text_.size() || text_[pos_] == '\n') {
      throw ParseError(std::string("expected ") + what, line_, col_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    std::string_view tok = text_.substr(start, pos_ - start);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid integer '" + std::string(tok) + "'", line_, col_);
    }
    col_ += pos_ - start;
    return value;
  }

  // Consumes the rest of the current line, which must be blank.
  void end_line(const char* what) {
    skip(false);
    if (pos_ < text_.size() && text_[pos_] != '\n') {
      throw ParseError(std::string("unexpected trailing token after ") + what, line_, col_);
    }
    if (pos_ < text_.size()) {
      ++pos_;
      ++line_;
      col_ = 1;
    }
  }

  void expect_end(const char* what) {
    if (!at_end()) throw ParseError(std::string("unexpected content after ") + what, line_, col_);
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return col_; }

 private:
  static bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; }

  void skip(bool newlines) {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++pos_;
        ++col_;
      } else if (ch == '\n' && newlines) {
        ++pos_;
        ++line_;
        col_ = 1;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace tumax::detail
