#include <cctype>

#include "basym/error.hpp"
#include "basym/poly.hpp"

namespace basym {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ == s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_++] == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        if (e > 100000) {
          pos_ = start;
          error("exponent too large");
        }
      }
      if (pos_ == start) error("expected exponent after '^'");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ == s_.size()) error("unexpected end of polynomial");
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(c)) {
      const std::uint64_t p = ring_->field().characteristic();
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    error(std::string("unexpected '") + s_[pos_] + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).run(); }

}  // namespace basym
