#include <cctype>
#include <cstdlib>
#include <string>
#include <utility>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"
#include "swfold/laurent.hpp"

namespace swfold {

namespace {

std::string format_term(const Basis& basis, const ExponentVector& e,
                        Coefficient magnitude) {
  std::string factors;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!factors.empty()) factors += '*';
    factors += basis.name(i);
    if (e[i] != 1) factors += '^' + std::to_string(e[i]);
  }
  if (factors.empty()) return std::to_string(magnitude);
  if (magnitude == 1) return factors;
  return std::to_string(magnitude) + '*' + factors;
}

struct ParsedTerm {
  std::size_t position;
  Coefficient coeff;
  ExponentVector exp;
};

// Recursive-descent reader for the polynomial grammar:
//   poly   := term (("+"|"-") term)*
//   term   := [sign] integer ("*" factor)* | [sign] factor ("*" factor)*
//   factor := ident ["^" [sign] integer]
class Reader {
 public:
  Reader(std::string_view text, const Basis& basis)
      : text_(text), basis_(basis) {}

  std::vector<ParsedTerm> terms() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (at_end()) fail("empty expression");
    out.push_back(term(false));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      ParsedTerm t = term(c == '-');
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  bool consume_sign() {
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    return negative;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int d = peek() - '0';
      if (v > (INT64_MAX - d) / 10) {
        pos_ = start;
        fail("integer literal out of range");
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  void factor(ExponentVector& exp) {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (!is_identifier(name)) {
      pos_ = start;
      fail("expected variable name");
    }
    std::size_t index = basis_.require_index(name);
    std::int64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool negative = consume_sign();
      power = integer();
      if (negative) power = -power;
    }
    exp[index] = checked::add(exp[index], power);
  }

  ParsedTerm term(bool negated) {
    ParsedTerm t{pos_, 1, ExponentVector(basis_.rank(), 0)};
    bool negative = consume_sign() != negated;
    if (at_end()) fail("expected coefficient or variable");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = integer();
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      factor(t.exp);
    } else {
      fail("expected coefficient or variable");
    }
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
      factor(t.exp);
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string_view text_;
  const Basis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Coefficient magnitude = c < 0 ? checked::neg(c) : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += format_term(p.basis(), e, magnitude);
    first = false;
  }
  return out;
}

LaurentPoly from_text(std::string_view text, const Basis& basis) {
  PolyBuilder b(basis);
  for (const auto& t : Reader(text, basis).terms()) b.add(t.exp, t.coeff);
  return std::move(b).build();
}

std::string linear_form_text(const Basis& basis, const ExponentVector& v) {
  if (v.size() != basis.rank()) {
    throw StructuralError("linear form length does not match basis rank");
  }
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t magnitude = v[i] < 0 ? checked::neg(v[i]) : v[i];
    if (out.empty()) {
      if (v[i] < 0) out += '-';
    } else {
      out += v[i] < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += std::to_string(magnitude) + '*';
    out += basis.name(i);
  }
  return out.empty() ? "0*" + basis.name(0) : out;
}

ExponentVector parse_linear_form(std::string_view text, const Basis& basis) {
  ExponentVector v(basis.rank(), 0);
  for (const auto& t : Reader(text, basis).terms()) {
    std::size_t nonzero = 0;
    std::size_t index = 0;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] != 0) {
        ++nonzero;
        index = i;
      }
    }
    if (nonzero != 1 || t.exp[index] != 1) {
      throw SyntaxError(t.position,
                        "linear form terms must be an integer times a single "
                        "variable");
    }
    v[index] = checked::add(v[index], t.coeff);
  }
  return v;
}

}  // namespace swfold
