#include <cctype>

#include "bsroots/errors.hpp"
#include "bsroots/padic.hpp"
#include "bsroots/polyring.hpp"

namespace bsroots {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const unsigned char c = text_[pos_];
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expression() {
    Polynomial acc(ring_.prime);
    bool negate = false;
    if (at('+') || at('-')) negate = text_[pos_++] == '-';
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (at('+') || at('-')) {
      negate = text_[pos_++] == '-';
      t = term();
      acc = negate ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (at('*')) {
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
    if (at('^')) {
      ++pos_;
      skip_space();
      const std::uint64_t n = unsigned_integer();
      base = base.pow(n);
    }
    return base;
  }

  std::uint64_t unsigned_integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    return v;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const unsigned char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      std::uint32_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = static_cast<std::uint32_t>((std::uint64_t{v} * 10 + (text_[pos_++] - '0')) % ring_.prime);
      }
      return Polynomial::constant(ring_.prime, v);
    }
    if (std::isalpha(c) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  // An identifier is either a variable name or a juxtaposition of variable
  // names (longest match first), so "xy" reads as x*y.
  Polynomial identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    Monomial m;
    while (!word.empty()) {
      std::size_t best = ring_.nvars();
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < ring_.nvars(); ++i) {
        const auto& name = ring_.variables[i];
        if (name.size() > best_len && word.substr(0, name.size()) == name) {
          best = i;
          best_len = name.size();
        }
      }
      if (best == ring_.nvars()) {
        pos_ = start;
        fail("unknown variable '" + std::string(word) + "'");
      }
      m = m * Monomial::variable(best);
      word.remove_prefix(best_len);
    }
    return Polynomial::monomial(ring_.prime, m);
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr make_ring(std::uint32_t prime, std::vector<std::string> variables) {
  if (!is_prime(prime)) throw PreconditionError("p = " + std::to_string(prime) + " is not prime");
  if (variables.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  return std::make_shared<const PolyRing>(PolyRing{prime, std::move(variables)});
}

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  return PolynomialParser(ring, text).parse();
}

std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_polynomial(ring, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace bsroots
