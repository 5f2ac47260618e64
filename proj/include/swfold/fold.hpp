#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "swfold/laurent.hpp"
#include "swfold/manifolds.hpp"

namespace swfold {

// Nonzero class chi in the exponent lattice of a basis.
class EulerClass {
 public:
  // Throws TorsionEulerClassError for the zero vector, StructuralError on a
  // length mismatch.
  EulerClass(Basis basis, ExponentVector chi);

  // Parses a linear form such as "4*m1" or "-1*m1 + 2*m2".
  static EulerClass parse(std::string_view text, const Basis& basis);

  const Basis& basis() const noexcept { return basis_; }
  const ExponentVector& vector() const noexcept { return chi_; }
  EulerClass negated() const;
  std::string to_text() const;

  friend bool operator==(const EulerClass&, const EulerClass&) = default;

 private:
  Basis basis_;
  ExponentVector chi_;
};

// Z^r / Z chi. The generator is chi or -chi, whichever has a positive entry
// at the pivot (its first nonzero coordinate).
class QuotientLattice {
 public:
  explicit QuotientLattice(const EulerClass& chi);

  const Basis& basis() const noexcept { return basis_; }
  std::size_t pivot() const noexcept { return pivot_; }
  const ExponentVector& generator() const noexcept { return generator_; }
  std::int64_t modulus() const noexcept { return generator_[pivot_]; }

  // The unique e - k*chi whose pivot coordinate lies in [0, modulus).
  ExponentVector canonical_rep(const ExponentVector& e) const;
  bool is_canonical(const ExponentVector& e) const;

  friend bool operator==(const QuotientLattice& a, const QuotientLattice& b) {
    return a.basis_ == b.basis_ && a.generator_ == b.generator_;
  }

 private:
  Basis basis_;
  ExponentVector generator_;
  std::size_t pivot_ = 0;
};

inline ExponentVector canonical_rep(const QuotientLattice& q,
                                    const ExponentVector& e) {
  return q.canonical_rep(e);
}

// Four-dimensional invariant of the circle bundle: coefficients indexed by
// canonical coset representatives. A result, never an operand.
struct FoldedSW {
  QuotientLattice quotient;
  LaurentPoly poly;
  std::string source;
};

// chi = 0: X = M x S^1 and SW4 coincides with SW3.
struct ProductCaseSW {
  LaurentPoly poly;
  std::string source;
};

// Coset sums of the coefficients of p.
LaurentPoly fold_polynomial(const LaurentPoly& p, const QuotientLattice& q);

// Merges support exponents by explicit search for integer shifts k*chi and
// labels each class by scanning for its in-range member. Shares no code
// with fold_polynomial.
LaurentPoly fold_bruteforce_polynomial(const LaurentPoly& p,
                                       const EulerClass& chi);

// Throws HypothesisError when b_+ < 2.
FoldedSW fold(const ThreeManifold& m, const EulerClass& chi);
FoldedSW fold_bruteforce(const ThreeManifold& m, const EulerClass& chi);

// Routes chi = 0 to the product case instead of throwing.
std::variant<FoldedSW, ProductCaseSW> fold_or_product(
    const ThreeManifold& m, const ExponentVector& chi);

// True iff no two support exponents of p differ by a multiple of chi.
bool is_injective_fold(const LaurentPoly& p, const EulerClass& chi);
bool is_injective_fold(const ThreeManifold& m, const EulerClass& chi);

// True iff d = k * chi for some nonzero integer k.
bool is_nonzero_multiple(const ExponentVector& d, const ExponentVector& chi);

// Circle bundle over a genus-g surface with Euler number n, by folding
// (t - t^-1)^(2g-2) mod n. Throws TorsionEulerClassError for n = 0.
FoldedSW circle_bundle_sw_direct(std::int64_t genus, std::int64_t n);

// Same invariant from the closed binomial double sum. The odd-n sum is
// labelled by i with class t^(2i); both outputs therefore live in the same
// quotient as circle_bundle_sw_direct. Throws DomainError for n = 0.
FoldedSW circle_bundle_sw_closed_form(std::int64_t genus, std::int64_t n);

// Binomial coefficient, zero for q < 0 or q > p.
std::int64_t binomial(std::int64_t p, std::int64_t q);

// A == B or A == -B. Throws StructuralError if the quotients differ.
bool equal_up_to_sign(const FoldedSW& a, const FoldedSW& b);

}  // namespace swfold
