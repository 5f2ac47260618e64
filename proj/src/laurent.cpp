#include "swfold/laurent.hpp"

#include <set>
#include <utility>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"

namespace swfold {

namespace {

void require_same_basis(const LaurentPoly& p, const LaurentPoly& q,
                        const char* op) {
  if (!(p.basis() == q.basis())) {
    throw StructuralError(std::string(op) + ": basis mismatch");
  }
}

void require_length(const Basis& basis, const ExponentVector& e) {
  if (e.size() != basis.rank()) {
    throw StructuralError("exponent vector of length " +
                          std::to_string(e.size()) + " used with rank " +
                          std::to_string(basis.rank()) + " basis");
  }
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  for (char c : s) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return true;
}

Basis::Basis(std::vector<std::string> names) {
  if (names.empty()) throw StructuralError("basis must have rank >= 1");
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) {
      throw StructuralError("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw StructuralError("duplicate variable name '" + n + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Basis::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Basis::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  std::string known;
  for (const auto& n : *names_) known += (known.empty() ? "" : ", ") + n;
  throw NameError("unknown variable '" + std::string(name) +
                  "' (basis: " + known + ")");
}

ExponentVector Basis::direction(std::string_view name,
                                std::int64_t multiple) const {
  ExponentVector e(rank(), 0);
  e[require_index(name)] = multiple;
  return e;
}

bool operator==(const Basis& a, const Basis& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

LaurentPoly::LaurentPoly(Basis basis) : basis_(std::move(basis)) {}

LaurentPoly::LaurentPoly(Basis basis, TermMap terms)
    : basis_(std::move(basis)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    require_length(basis_, it->first);
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

LaurentPoly LaurentPoly::constant(Basis basis, Coefficient c) {
  ExponentVector zero(basis.rank(), 0);
  return monomial(basis, c, zero);
}

Coefficient LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void PolyBuilder::add(const ExponentVector& e, Coefficient c) {
  require_length(basis_, e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly PolyBuilder::build() && {
  return LaurentPoly(std::move(basis_), std::move(terms_));
}

LaurentPoly monomial(const Basis& basis, Coefficient coeff,
                     const ExponentVector& exp) {
  require_length(basis, exp);
  LaurentPoly::TermMap t;
  if (coeff != 0) t.emplace(exp, coeff);
  return LaurentPoly(basis, std::move(t));
}

LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_basis(p, q, "combine");
  PolyBuilder b(p.basis());
  for (const auto& [e, c] : p.terms()) b.add(e, c);
  for (const auto& [e, c] : q.terms()) b.add(e, c);
  return std::move(b).build();
}

LaurentPoly negate(const LaurentPoly& p) { return scale(p, -1); }

LaurentPoly scale(const LaurentPoly& p, Coefficient k) {
  LaurentPoly::TermMap t;
  if (k != 0) {
    for (const auto& [e, c] : p.terms()) t.emplace(e, checked::mul(c, k));
  }
  return LaurentPoly(p.basis(), std::move(t));
}

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_basis(p, q, "multiply");
  PolyBuilder b(p.basis());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      b.add(add_exponents(ep, eq), checked::mul(cp, cq));
    }
  }
  return std::move(b).build();
}

LaurentPoly power(const LaurentPoly& p, std::int64_t k) {
  if (k < 0) {
    throw DomainError("power: negative exponent " + std::to_string(k));
  }
  LaurentPoly result = LaurentPoly::constant(p.basis(), 1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

LaurentPoly conjugate(const LaurentPoly& p) {
  LaurentPoly::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = checked::neg(e[i]);
    t.emplace(std::move(m), c);
  }
  return LaurentPoly(p.basis(), std::move(t));
}

LaurentPoly reindex(const LaurentPoly& p, const Basis& target,
                    std::span<const ExponentVector> images) {
  if (images.size() != p.basis().rank()) {
    throw StructuralError("reindex: expected " +
                          std::to_string(p.basis().rank()) +
                          " images, got " + std::to_string(images.size()));
  }
  for (const auto& img : images) require_length(target, img);

  PolyBuilder b(target);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector out(target.rank(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked::add(out[j], checked::mul(e[i], images[i][j]));
      }
    }
    b.add(out, c);
  }
  return std::move(b).build();
}

Coefficient eval_ones(const LaurentPoly& p) {
  Coefficient sum = 0;
  for (const auto& [e, c] : p.terms()) sum = checked::add(sum, c);
  return sum;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_text(p);
}

}  // namespace swfold
