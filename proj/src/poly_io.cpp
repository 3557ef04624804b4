#include "invmaps/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "invmaps/errors.hpp"
#include "invmaps/report.hpp"

namespace invmaps {

std::string format_monomial(const MultiIndex& alpha, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << var << (j + 1);
    if (alpha[j] != 1) os << '^' << alpha[j];
  }
  if (first) os << '1';
  return os.str();
}

std::string format_polynomial(const Polynomial& g, std::string_view var) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : g.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (alpha.degree() == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << ' ';
      os << format_monomial(alpha, var);
    }
  }
  return os.str();
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  struct RawTerm {
    Rational coeff;
    std::vector<std::pair<std::size_t, int>> factors;  // (0-based var, exponent)
  };

  std::vector<RawTerm> parse_all(bool allow_coeff) {
    std::vector<RawTerm> out;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      if (!allow_coeff) fail("unexpected '-'");
      ++pos_;
      sign = -1;
    }
    while (true) {
      RawTerm t = parse_term(allow_coeff);
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || (c == '-' && allow_coeff)) {
        if (!allow_coeff) fail("a monomial cannot contain '+'");
        sign = (c == '-') ? -1 : 1;
        ++pos_;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return out;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  RawTerm parse_term(bool allow_coeff) {
    RawTerm t;
    t.coeff = 1;
    skip_ws();
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (!allow_coeff) fail("coefficient not allowed in a monomial");
      const mpz_class num = parse_unsigned();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = parse_unsigned();
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      saw_anything = true;
    }
    while (true) {
      skip_ws();
      if (peek() != 'x') break;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
      const std::size_t idx_pos = pos_;
      const mpz_class idx = parse_unsigned();
      if (idx < 1 || idx > 1'000'000) fail_at("variable index out of range", idx_pos);
      int exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (peek() == '-') fail("negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
        const std::size_t exp_pos = pos_;
        const mpz_class e = parse_unsigned();
        if (e > 1'000'000) fail_at("exponent too large", exp_pos);
        exponent = static_cast<int>(e.get_si());
      }
      const auto var = static_cast<std::size_t>(idx.get_ui());
      max_index_ = std::max(max_index_, var);
      t.factors.emplace_back(var - 1, exponent);
      saw_anything = true;
    }
    if (!saw_anything) fail(at_end() ? "unexpected end of input" : "expected a term");
    return t;
  }

  mpz_class parse_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

std::size_t resolve_vars(std::optional<std::size_t> requested, std::size_t seen) {
  if (!requested) return std::max<std::size_t>(seen, 1);
  if (seen > *requested) {
    throw ParseError("variable x" + std::to_string(seen) + " exceeds the " +
                     std::to_string(*requested) + " available variables");
  }
  return *requested;
}

MultiIndex to_multi_index(const std::vector<std::pair<std::size_t, int>>& factors, std::size_t n) {
  std::vector<int> exps(n, 0);
  for (const auto& [var, e] : factors) exps[var] += e;
  return MultiIndex(std::move(exps));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> num_vars) {
  TextParser parser(text);
  const auto raw = parser.parse_all(true);
  const std::size_t n = resolve_vars(num_vars, parser.max_index());
  Polynomial out(n);
  for (const auto& t : raw) out.add_term(to_multi_index(t.factors, n), t.coeff);
  return out;
}

MultiIndex parse_monomial(std::string_view text, std::size_t num_vars) {
  TextParser parser(text);
  const auto raw = parser.parse_all(false);
  const std::size_t n = resolve_vars(num_vars, parser.max_index());
  return to_multi_index(raw.front().factors, n);
}

Polynomial parse_polynomial_any(std::string_view text, std::optional<std::size_t> num_vars) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    Polynomial g = polynomial_from_json(j);
    if (num_vars && g.num_vars() != *num_vars) {
      throw ParseError("JSON polynomial has " + std::to_string(g.num_vars()) +
                       " variables, expected " + std::to_string(*num_vars));
    }
    return g;
  }
  return parse_polynomial(text, num_vars);
}

}  // namespace invmaps
