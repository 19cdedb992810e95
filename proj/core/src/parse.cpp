#include "ffhyper/parse.hpp"

#include <cctype>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

class Parser {
 public:
  Parser(const FieldPtr& field, std::string_view text, std::optional<std::size_t> nvars)
      : field_(field), text_(text), declared_(nvars) {}

  MultiPoly run() {
    // First pass finds the arity so every intermediate result shares it.
    nvars_ = declared_.value_or(std::max<std::size_t>(scan_max_index(), 1));
    skip_ws();
    if (at_end()) fail("empty polynomial");
    MultiPoly out = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::size_t scan_max_index() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < text_.size(); ++i) {
      if (text_[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text_[i + 1]))) continue;
      std::size_t v = 0;
      for (std::size_t j = i + 1; j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])); ++j) {
        v = v * 10 + static_cast<std::size_t>(text_[j] - '0');
        if (v > 64) break;
      }
      best = std::max(best, v);
    }
    return best;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) fail_at("integer literal too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      MultiPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  MultiPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const std::uint64_t e = integer();
    if (e > 4096) fail_at("exponent too large", at);
    return base.pow(static_cast<unsigned>(e));
  }

  MultiPoly primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return MultiPoly::constant(field_, nvars_, field_->from_int(static_cast<std::int64_t>(v % field_->p())));
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
      const std::uint64_t idx = integer();
      if (idx == 0) fail_at("variables are numbered from x1", at);
      if (idx > nvars_) {
        fail_at("variable x" + std::to_string(idx) + " exceeds arity " + std::to_string(nvars_), at);
      }
      return MultiPoly::variable(field_, nvars_, static_cast<std::size_t>(idx - 1));
    }
    if (c == 'g') {
      ++pos_;
      if (field_->is_prime()) fail_at("generator 'g' is only available in extension fields", pos_ - 1);
      return MultiPoly::constant(field_, nvars_, field_->generator());
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const FieldPtr& field_;
  std::string_view text_;
  std::optional<std::size_t> declared_;
  std::size_t nvars_ = 1;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const FieldPtr& field, std::string_view text, std::optional<std::size_t> nvars) {
  return Parser(field, text, nvars).run();
}

std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const Field& F = *f.field();
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    const bool is_const = exponent_sum(t.exps) == 0;
    std::string coeff = F.format(t.coeff);
    if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (t.exps[i] > 1) mono += '^' + std::to_string(t.exps[i]);
    }
    if (is_const) {
      out += coeff;
    } else if (t.coeff == F.one()) {
      out += mono;
    } else {
      out += coeff + '*' + mono;
    }
  }
  return out;
}

std::string MultiPoly::to_string() const { return format_poly(*this); }

}  // namespace ffhyper
