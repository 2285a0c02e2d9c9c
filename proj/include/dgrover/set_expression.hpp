#pragma once

// Text form of connection sets. Comma-separated terms:
//   a^K, a          rotation a^K (K any decimal integer, reduced mod n)
//   b, b*a^K, b*a   reflection b a^K
//   b*<a>           all reflections
//   b*<a^2>         b a^{2j}
//   b*a*<a^2>       b a^{2j+1}  (b*a^K*<a^2> and b*a^K*<a> also accepted)
//   <a>\1           all non-identity rotations
// Whitespace between tokens is ignored.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dgrover/dihedral.hpp"

namespace dgrover {

struct SetExpression {
  std::string source;
  ConnectionSet set;
};

namespace detail {

class SetParser {
public:
  SetParser(std::string_view text, int n) : text_(text), n_(n) {}

  std::vector<DihedralElement> parse() {
    std::vector<DihedralElement> out;
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "empty set expression");
    for (;;) {
      term(out);
      skip_space();
      if (at_end()) break;
      expect(',');
      skip_space();
    }
    return out;
  }

private:
  void term(std::vector<DihedralElement> &out) {
    if (peek() == '<') {
      expect_word("<a>");
      skip_space();
      expect('\\');
      skip_space();
      expect('1');
      for (int k = 1; k < n_; ++k) out.push_back(DihedralElement::rotation(k, n_));
      return;
    }
    if (peek() == 'a') {
      ++pos_;
      out.push_back(DihedralElement::rotation(optional_exponent(), n_));
      return;
    }
    if (peek() == 'b') {
      ++pos_;
      skip_space();
      if (peek() != '*') {
        out.push_back(DihedralElement::reflection(0, n_));
        return;
      }
      ++pos_;
      skip_space();
      long long offset = 0;
      if (peek() == 'a') {
        ++pos_;
        offset = optional_exponent();
        skip_space();
        if (peek() != '*') {
          out.push_back(DihedralElement::reflection(offset, n_));
          return;
        }
        ++pos_;
        skip_space();
      }
      const int step = subgroup();
      for (long long j = 0; j < n_; ++j) out.push_back(DihedralElement::reflection(offset + step * j, n_));
      return;
    }
    throw SyntaxError(pos_, "expected a term (a^K, b, b*a^K, b*<a>, b*<a^2>, b*a*<a^2>, <a>\\1)");
  }

  // "<a>" -> 1, "<a^2>" -> 2
  int subgroup() {
    expect('<');
    skip_space();
    expect('a');
    skip_space();
    int step = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      expect('2');
      step = 2;
      skip_space();
    }
    expect('>');
    return step;
  }

  long long optional_exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    return integer();
  }

  long long integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const char *first = text_.data() + pos_;
    const char *last = text_.data() + text_.size();
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw SyntaxError(start, "expected an integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return text_[start] == '-' ? -value : value;
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view word) {
    for (char c : word) {
      skip_space();
      expect(c);
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline std::vector<DihedralElement> parse_elements(std::string_view text, int n) {
  require_order(n);
  return detail::SetParser(text, n).parse();
}

inline SetExpression parse_set(std::string_view text, int n) {
  const auto elements = parse_elements(text, n);
  return {std::string(text), validate_connection_set(elements, n)};
}

// Canonical text: sorted elements joined by ", ". parse_set reads it back.
inline std::string format_set(const ConnectionSet &s) {
  std::string out;
  for (const auto &x : s.elements()) {
    if (!out.empty()) out += ", ";
    out += x.to_string();
  }
  return out;
}

} // namespace dgrover
