#include "swfold/manifolds.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"

namespace swfold {

ThreeManifold three_torus() {
  Basis basis{"m1", "m2", "m3"};
  return ThreeManifold{"T3", basis, 3, LaurentPoly::constant(basis, 1), true,
                       "T3"};
}

ThreeManifold surface_times_circle(std::int64_t genus) {
  if (genus < 1) {
    throw DomainError("surface genus must be >= 1, got " +
                      std::to_string(genus));
  }
  Basis basis{"t"};
  LaurentPoly t_minus_inverse =
      monomial(basis, 1, {1}) + monomial(basis, -1, {-1});
  std::string name = "Sigma_" + std::to_string(genus) + " x S1";
  return ThreeManifold{name,
                       basis,
                       checked::add(checked::mul(2, genus), 1),
                       power(t_minus_inverse, checked::mul(2, genus - 1)),
                       true,
                       name};
}

ThreeManifold fiber_sum_with_knot(const ThreeManifold& m, const KnotRecord& knot,
                                  const std::string& meridian) {
  std::vector<ExponentVector> images{m.basis.direction(meridian, 2)};
  LaurentPoly substituted = reindex(knot.alexander, m.basis, images);

  ThreeManifold out = m;
  out.sw3 = multiply(m.sw3, substituted);
  out.fibered = m.fibered && knot.fibered;
  out.provenance = m.provenance + " #_" + meridian + " " + knot.name;
  out.name = out.provenance;
  return out;
}

std::string Applicability::summary() const {
  std::string s = chi_nonzero ? "chi nonzero" : "chi = 0 (torsion)";
  s += "; b+ = " + std::to_string(b_plus);
  s += b_plus_ok() ? " >= 2" : " < 2";
  return s;
}

Applicability fold_hypotheses(const ThreeManifold& m,
                                  const ExponentVector& chi) {
  if (chi.size() != m.basis.rank()) {
    throw StructuralError("Euler class length does not match basis rank");
  }
  Applicability a;
  a.chi_nonzero = std::any_of(chi.begin(), chi.end(),
                              [](std::int64_t x) { return x != 0; });
  a.b_plus = checked::sub(m.b1, 1);
  return a;
}

}  // namespace swfold
