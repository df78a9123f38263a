#include "colombeau/expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <vector>

#include "colombeau/diffeo.hpp"
#include "colombeau/lie.hpp"
#include "colombeau/registry.hpp"

namespace colombeau {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  template <class T>
  T whole(T (Parser::*rule)()) {
    T value = (this->*rule)();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return value;
  }

  Distribution distribution() {
    Distribution d = dist_term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        d = d + dist_term();
      } else if (accept('-')) {
        d = d - dist_term();
      } else {
        return d;
      }
    }
  }

  Representative representative() {
    const std::size_t start = skip_space();
    const std::string name = identifier("representative constructor");
    if (name == "zero") return zero_representative();
    if (name == "iota") {
      expect('(');
      Distribution d = distribution();
      expect(')');
      return embed_distribution(d);
    }
    if (name == "sigma") {
      expect('(');
      const std::size_t at = skip_space();
      const std::string fname = identifier("function name");
      auto f = find_function(fname);
      if (!f) fail_at(at, "unknown function '" + fname + "'");
      expect(')');
      return embed_smooth(fname, *f);
    }
    if (name == "add" || name == "sub") {
      expect('(');
      Representative a = representative();
      expect(',');
      Representative b = representative();
      expect(')');
      return name == "add" ? rep_add(a, b) : rep_sub(a, b);
    }
    if (name == "mul") {
      expect('(');
      Representative r = representative();
      expect(',');
      r = rep_mul(r, representative());
      while (accept(',')) r = rep_mul(r, representative());
      expect(')');
      return r;
    }
    if (name == "scale") {
      expect('(');
      const double c = number();
      expect(',');
      Representative a = representative();
      expect(')');
      return rep_scale(c, a);
    }
    if (name == "pow") {
      expect('(');
      Representative a = representative();
      expect(',');
      const std::size_t at = skip_space();
      const int n = integer();
      expect(')');
      return guarded(at, [&] { return rep_pow(a, n); });
    }
    if (name == "lie") {
      expect('(');
      VectorField x = field();
      expect(',');
      Representative a = representative();
      expect(')');
      return lie_derivative(x, a);
    }
    if (name == "act") {
      expect('(');
      Diffeomorphism mu = diffeo();
      expect(',');
      Representative a = representative();
      expect(')');
      return act_on_representative(mu, a);
    }
    fail_at(start, "unknown representative constructor '" + name + "'");
  }

  VectorField field() {
    const std::size_t start = skip_space();
    const std::string name = identifier("vector field");
    if (name == "ddx") return VectorField::translation();
    if (name == "euler") return VectorField::euler();
    if (name == "sinefield") {
      const double b = paren_number();
      return guarded(start, [&] { return VectorField::sine_field(b); });
    }
    fail_at(start, "unknown vector field '" + name + "'");
  }

  Diffeomorphism diffeo() {
    const std::size_t start = skip_space();
    const std::string name = identifier("diffeomorphism");
    if (name == "identity") return Diffeomorphism::identity();
    if (name == "cubic") return cubic();
    if (name == "shift") {
      const double a = paren_number();
      return shift(a);
    }
    if (name == "scale") {
      const double k = paren_number();
      return guarded(start, [&] { return scaling(k); });
    }
    if (name == "sine_perturb") {
      const double b = paren_number();
      return guarded(start, [&] { return sine_perturbation(b); });
    }
    if (name == "compose") {
      expect('(');
      Diffeomorphism outer = diffeo();
      expect(',');
      Diffeomorphism inner = diffeo();
      expect(')');
      return compose(outer, inner);
    }
    fail_at(start, "unknown diffeomorphism '" + name + "'");
  }

 private:
  Distribution dist_term() {
    skip_space();
    if (accept('-')) return -1.0 * dist_term();
    skip_space();
    if (pos_ < src_.size() && starts_number(src_[pos_])) {
      const double c = number();
      expect('*');
      return c * dist_atom();
    }
    return dist_atom();
  }

  Distribution dist_atom() {
    const std::size_t start = skip_space();
    if (accept('(')) {
      Distribution d = distribution();
      expect(')');
      return d;
    }
    const std::string name = identifier("distribution");
    if (name == "delta") return Distribution::delta(paren_number());
    if (name == "heaviside") return Distribution::heaviside(paren_number());
    if (name == "ddelta") {
      expect('(');
      const double p = number();
      expect(',');
      const std::size_t at = skip_space();
      const int m = integer();
      expect(')');
      return guarded(at, [&] { return Distribution::delta_derivative(p, m); });
    }
    if (name == "regular") {
      expect('(');
      const std::size_t at = skip_space();
      const std::string fname = identifier("function name");
      auto f = find_function(fname);
      if (!f) fail_at(at, "unknown function '" + fname + "'");
      expect(')');
      return Distribution::regular(fname, *f);
    }
    fail_at(start, "unknown distribution '" + name + "'");
  }

  double paren_number() {
    expect('(');
    const double x = number();
    expect(')');
    return x;
  }

  static bool starts_number(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-';
  }

  double number() {
    const std::size_t start = skip_space();
    std::size_t end = pos_;
    if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
    bool digits = false;
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
      ++end;
      digits = true;
    }
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
        ++end;
        digits = true;
      }
    }
    if (digits && end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
      if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
        while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
        end = e;
      }
    }
    if (!digits) fail_at(start, "expected a number");
    const std::string token(src_.substr(start, end - start));
    char* stop = nullptr;
    const double v = std::strtod(token.c_str(), &stop);
    if (stop != token.c_str() + token.size()) fail_at(start, "malformed number '" + token + "'");
    pos_ = end;
    return v;
  }

  int integer() {
    const std::size_t start = skip_space();
    int v = 0;
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail_at(start, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string identifier(const char* what) {
    const std::size_t start = skip_space();
    std::size_t end = pos_;
    while (end < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
      ++end;
    }
    if (end == start || std::isdigit(static_cast<unsigned char>(src_[start]))) {
      fail_at(start, std::string("expected ") + what);
    }
    pos_ = end;
    return std::string(src_.substr(start, end - start));
  }

  std::size_t skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + src_[pos_] + "'");
    }
  }

  template <class F>
  auto guarded(std::size_t at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    }
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Distribution parse_distribution(std::string_view text) {
  return Parser(text).whole(&Parser::distribution);
}

Representative parse_representative(std::string_view text) {
  return Parser(text).whole(&Parser::representative);
}

VectorField parse_field(std::string_view text) { return Parser(text).whole(&Parser::field); }

Diffeomorphism parse_diffeo(std::string_view text) { return Parser(text).whole(&Parser::diffeo); }

}  // namespace colombeau
