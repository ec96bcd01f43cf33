#include "symbc/parse.hpp"

#include <cctype>
#include <map>

#include "symbc/exterior.hpp"

namespace symbc {

namespace {

using Value = std::map<int, Form>;  // degree -> component

class Parser {
 public:
  Parser(int n, const std::string& text) : n_(n), s_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(const char* tok) {
    skip_ws();
    return s_.compare(pos_, std::char_traits<char>::length(tok), tok) == 0;
  }

  bool accept(const char* tok) {
    if (!peek(tok)) return false;
    pos_ += std::char_traits<char>::length(tok);
    return true;
  }

  static void add_into(Value& acc, const Value& v, const Scalar& sign) {
    for (const auto& [deg, f] : v) {
      auto it = acc.find(deg);
      if (it == acc.end()) {
        acc.emplace(deg, f * sign);
      } else {
        it->second += f * sign;
      }
    }
  }

  Value product(const Value& a, const Value& b) {
    Value out;
    for (const auto& [da, fa] : a)
      for (const auto& [db, fb] : b) add_into(out, {{da + db, wedge(fa, fb)}}, Scalar(1));
    return out;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (accept("+")) {
        add_into(acc, term(), Scalar(1));
      } else if (peek("-")) {
        ++pos_;
        add_into(acc, term(), Scalar(-1));
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (peek("**")) return acc;  // handled in power(); reaching here is a bug in input
      if (accept("*") || accept("^")) {
        acc = product(acc, unary());
      } else if (peek("/")) {
        std::size_t at = pos_;
        ++pos_;
        Value d = unary();
        Scalar c = constant_of(d, at);
        if (c.is_zero()) throw ParseError("division by zero", at);
        for (auto& [deg, f] : acc) f *= c.inverse();
      } else {
        return acc;
      }
    }
  }

  Scalar constant_of(const Value& v, std::size_t at) {
    Scalar c;
    for (const auto& [deg, f] : v) {
      if (f.is_zero()) continue;
      if (deg != 0 || !f.is_constant()) throw ParseError("divisor must be a constant", at);
      c = f.terms().begin()->second.constant_term();
    }
    return c;
  }

  Value unary() {
    if (accept("-")) {
      Value v = unary();
      for (auto& [deg, f] : v) f *= Scalar(-1);
      return v;
    }
    if (accept("+")) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek("**")) {
      std::size_t at = pos_;
      pos_ += 2;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected integer exponent", pos_);
      int e = std::stoi(s_.substr(start, pos_ - start));
      for (const auto& [deg, f] : base)
        if (deg != 0 && !f.is_zero()) throw ParseError("powers apply to functions only", at);
      Value out{{0, Form::constant(n_, Scalar(1))}};
      for (int i = 0; i < e; ++i) out = product(out, base);
      return out;
    }
    return base;
  }

  int index_after(char kind, std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected index after '") + kind + "'", pos_);
    int k = std::stoi(s_.substr(start, pos_ - start));
    if (k < 1 || k > n_) throw ParseError("variable index out of range", at);
    return k;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    std::size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      return {{0, Form::constant(n_, Scalar(mpq_class(z)))}};
    }
    if (c == 'i' && !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return {{0, Form::constant(n_, Scalar::imaginary_unit())}};
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      int k = index_after(c, at);
      int var = 2 * (k - 1) + (c == 'y');
      return {{0, Form::function(n_, Poly::variable(var))}};
    }
    if (c == 'd' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == 'x' || s_[pos_ + 1] == 'y')) {
      char kind = s_[pos_ + 1];
      pos_ += 2;
      int k = index_after(kind, at);
      return {{1, Form::differential(n_, 2 * (k - 1) + (kind == 'y'))}};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", at);
  }

  int n_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Form> parse_forms(int n, const std::string& text) {
  if (n < 1 || n > 4) throw std::invalid_argument("half-dimension must be in 1..4");
  Value v = Parser(n, text).parse();
  std::vector<Form> out;
  for (auto& [deg, f] : v)
    if (!f.is_zero()) out.push_back(f);
  if (out.empty() && !v.empty()) out.push_back(v.begin()->second);
  return out;
}

Form parse_form(int n, const std::string& text) {
  auto parts = parse_forms(n, text);
  if (parts.size() != 1) throw ParseError("expression is not homogeneous", 0);
  return parts.front();
}

}  // namespace symbc
