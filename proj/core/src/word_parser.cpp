#include "mukai/word_parser.hpp"

#include <cctype>
#include <limits>

namespace mukai {
namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += i + 1 == expected.size() ? " or " : ", ";
    s += expected[i];
  }
  return s;
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Generator> gens;
    gens.push_back(term());
    while (eat('*')) gens.push_back(term());
    skip_ws();
    if (pos_ != text_.size()) fail({"'*'", "end of input"});
    return Word(std::move(gens));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), found());
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail({std::string("'") + c + "'"});
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string name() {
    skip_ws();
    if (pos_ >= text_.size() || !name_start(text_[pos_])) fail({"name"});
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t begin = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"integer"});
    std::uint64_t value = 0;
    constexpr auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > limit) {
        pos_ = begin;
        fail({"integer within 64-bit range"});
      }
      ++pos_;
    }
    const auto v = static_cast<std::int64_t>(value);
    return negative ? -v : v;
  }

  Generator term() {
    skip_ws();
    const char head = pos_ < text_.size() ? text_[pos_] : '\0';
    switch (head) {
      case 'T': {
        ++pos_;
        expect('(');
        std::string curve = name();
        expect(',');
        const std::int64_t a = integer();
        expect(')');
        return Twist{std::move(curve), a};
      }
      case 'L': {
        ++pos_;
        expect('(');
        std::string bundle = name();
        expect(')');
        return Tensor{std::move(bundle)};
      }
      case 'F': {
        ++pos_;
        expect('(');
        std::string iso = name();
        expect(')');
        return Pullback{std::move(iso)};
      }
      case 'S': {
        ++pos_;
        expect('(');
        const std::int64_t k = integer();
        expect(')');
        return Shift{k};
      }
      default:
        fail({"'T('", "'L('", "'F('", "'S('"});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("parse error at byte " + std::to_string(offset) + ": expected " + describe_expected(expected) +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

}  // namespace mukai
