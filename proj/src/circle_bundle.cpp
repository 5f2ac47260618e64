#include <algorithm>
#include <string>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"
#include "swfold/fold.hpp"

namespace swfold {

namespace {

std::string bundle_name(std::int64_t genus, std::int64_t n) {
  return "circle bundle over Sigma_" + std::to_string(genus) +
         " with Euler number " + std::to_string(n);
}

}  // namespace

std::int64_t binomial(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0 || q > p) return 0;
  q = std::min(q, p - q);
  std::int64_t c = 1;
  for (std::int64_t j = 1; j <= q; ++j) {
    // c * (p - q + j) is divisible by j at every step.
    c = checked::mul(c, p - q + j) / j;
  }
  return c;
}

FoldedSW circle_bundle_sw_direct(std::int64_t genus, std::int64_t n) {
  ThreeManifold base = surface_times_circle(genus);
  FoldedSW folded = fold(base, EulerClass(base.basis, {n}));
  folded.source = bundle_name(genus, n);
  return folded;
}

FoldedSW circle_bundle_sw_closed_form(std::int64_t genus, std::int64_t n) {
  if (genus < 1) {
    throw DomainError("surface genus must be >= 1, got " +
                      std::to_string(genus));
  }
  if (n == 0) throw DomainError("closed form requires Euler number n != 0");

  const Basis basis = surface_times_circle(genus).basis;
  QuotientLattice quotient(EulerClass(basis, {n}));

  // Even n = 2l sums over i < |l| with step |l|; odd n uses |n| for both.
  const bool even = n % 2 == 0;
  const std::int64_t step = even ? (n < 0 ? -n : n) / 2 : (n < 0 ? -n : n);
  const std::int64_t top = checked::mul(2, genus - 1);
  const Coefficient sign = n > 0 ? 1 : -1;

  PolyBuilder b(basis);
  for (std::int64_t i = 0; i < step; ++i) {
    Coefficient sum = 0;
    for (std::int64_t k = -top; k <= top; ++k) {
      const std::int64_t q =
          checked::add(checked::add(genus - 1, i), checked::mul(k, step));
      const std::int64_t c = binomial(top, q);
      if (c == 0) continue;
      sum = checked::add(sum, (q % 2 == 0) ? c : -c);
    }
    b.add(quotient.canonical_rep({checked::mul(2, i)}),
          checked::mul(sign, sum));
  }
  return FoldedSW{quotient, std::move(b).build(), bundle_name(genus, n)};
}

}  // namespace swfold
