#pragma once

// Grammar (whitespace insignificant):
//   word := term ( "*" term )*
//   term := "T(" name "," int ")" | "L(" name ")" | "F(" name ")" | "S(" int ")"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mukai/actions.hpp"
#include "mukai/errors.hpp"

namespace mukai {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

Word parse_word(std::string_view text);

}  // namespace mukai
