#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swfold {

using Coefficient = std::int64_t;

// Exponent of a monomial, one entry per basis variable. Adding two vectors
// multiplies the corresponding monomials.
using ExponentVector = std::vector<std::int64_t>;

// Ordered list of distinct variable names. Copies share storage.
class Basis {
 public:
  explicit Basis(std::vector<std::string> names);
  Basis(std::initializer_list<std::string> names)
      : Basis(std::vector<std::string>(names)) {}

  std::size_t rank() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws NameError when `name` is not a basis variable.
  std::size_t require_index(std::string_view name) const;

  // Unit exponent vector along `name`, scaled by `multiple`.
  ExponentVector direction(std::string_view name,
                           std::int64_t multiple = 1) const;

  friend bool operator==(const Basis& a, const Basis& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s);

// Sparse Laurent polynomial with integer coefficients. Terms are kept in
// lexicographic exponent order with no zero coefficients; instances are
// immutable once built.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Coefficient>;

  explicit LaurentPoly(Basis basis);
  // Zero coefficients are dropped; exponent lengths are checked.
  LaurentPoly(Basis basis, TermMap terms);

  static LaurentPoly constant(Basis basis, Coefficient c);

  const Basis& basis() const noexcept { return basis_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const ExponentVector& e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  Basis basis_;
  TermMap terms_;
};

// Accumulates terms, summing coefficients of equal exponents.
class PolyBuilder {
 public:
  explicit PolyBuilder(Basis basis) : basis_(std::move(basis)) {}
  void add(const ExponentVector& e, Coefficient c);
  LaurentPoly build() &&;

 private:
  Basis basis_;
  LaurentPoly::TermMap terms_;
};

LaurentPoly monomial(const Basis& basis, Coefficient coeff,
                     const ExponentVector& exp);

LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly negate(const LaurentPoly& p);
LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, Coefficient c);
// Throws DomainError for negative k.
LaurentPoly power(const LaurentPoly& p, std::int64_t k);
// Inverts every variable: exponent e becomes -e.
LaurentPoly conjugate(const LaurentPoly& p);
// Substitution of monomials: source variable i goes to the monomial with
// exponent images[i] in `target`.
LaurentPoly reindex(const LaurentPoly& p, const Basis& target,
                    std::span<const ExponentVector> images);
// Value at the point where every variable is 1.
Coefficient eval_ones(const LaurentPoly& p);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  return combine(p, q);
}
inline LaurentPoly operator-(const LaurentPoly& p) { return negate(p); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return combine(p, negate(q));
}
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return multiply(p, q);
}

// Canonical text form: terms in lexicographic exponent order, explicit
// signs, "0" for the zero polynomial.
std::string to_text(const LaurentPoly& p);
// Throws SyntaxError (with position) or NameError.
LaurentPoly from_text(std::string_view text, const Basis& basis);

// Linear form a1*x1 + ... over the basis, e.g. "4*m1" or "m1 - 2*m2".
std::string linear_form_text(const Basis& basis, const ExponentVector& v);
// Parses a sum of degree-one terms; constants and higher powers are rejected.
ExponentVector parse_linear_form(std::string_view text, const Basis& basis);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace swfold
