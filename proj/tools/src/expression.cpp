#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "feynman/mzv.hpp"
#include "feynman_cli/cli.hpp"

namespace feynman::cli {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  double expr() {
    double v = term();
    while (true) {
      skip();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    while (true) {
      skip();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    skip();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    const double base = primary();
    skip();
    if (accept('^')) return std::pow(base, unary());
    return base;
  }

  double primary() {
    skip();
    if (accept('(')) {
      const double v = expr();
      expect(')');
      return v;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return v;
    }
    const std::string name = identifier();
    if (name == "pi") return boost::math::constants::pi<double>();
    if (name == "log2") return std::log(2.0);
    if (name == "log") {
      expect('(');
      const double v = expr();
      expect(')');
      return std::log(v);
    }
    if (name == "zeta") {
      expect('(');
      std::vector<unsigned> idx;
      do {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a positive integer");
        idx.push_back(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        skip();
      } while (accept(','));
      expect(')');
      if (idx.size() == 1) return zeta(idx[0]).value;
      return mzv(MzvIndex(idx)).value;
    }
    if (name.empty()) fail("expected a number, name or '('");
    fail("unknown name '" + name + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

double evaluate_expression(const std::string& text) { return Parser(text).parse(); }

}  // namespace feynman::cli
