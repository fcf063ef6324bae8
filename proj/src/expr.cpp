#include "sexticlab/expr.hpp"

#include <cctype>
#include <map>

#include "sexticlab/error.hpp"

namespace sexticlab {

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPoly parse_sum() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      }
      parse_term(sign);
      first = false;
      skip_ws();
    }
    std::vector<Int> c;
    for (const auto& [e, v] : terms_) {
      if (c.size() <= e) c.resize(e + 1, Int(0));
      c[e] += v;
    }
    return IntPoly(std::move(c));
  }

  IntPoly parse_list() {
    std::vector<Int> c;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected integer coefficient", pos_);
      }
      c.push_back(sign * read_integer());
      skip_ws();
      if (at_end()) break;
      if (peek() != ',') throw ParseError(std::string("expected ',', found '") + peek() + "'", pos_);
      ++pos_;
    }
    return IntPoly(std::move(c));
  }

 private:
  void parse_term(int sign) {
    const std::size_t start = pos_;
    Int coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    unsigned exponent = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t epos = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("expected exponent after '^'", pos_);
        }
        const Int e = read_integer();
        if (e > kMaxExponent) throw ParseError("exponent exceeds 64", epos);
        exponent = static_cast<unsigned>(e.get_ui());
      }
    } else if (!have_coeff) {
      throw ParseError(at_end() ? std::string("expected term") : std::string("unexpected '") + peek() + "'",
                       start);
    }
    terms_[exponent] += sign * coeff;
  }

  Int read_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::size_t, Int> terms_;
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
  Parser parser(text);
  if (text.find(',') != std::string_view::npos) return parser.parse_list();
  return parser.parse_sum();
}

}  // namespace sexticlab
