#pragma once

#include <cstdint>
#include <string>

#include "swfold/alexander.hpp"
#include "swfold/laurent.hpp"

namespace swfold {

// Orbit-space 3-manifold together with its Seiberg-Witten polynomial.
// The basis tracks H_1 generators mod torsion that the polynomial uses.
struct ThreeManifold {
  std::string name;
  Basis basis;
  std::int64_t b1 = 0;
  LaurentPoly sw3;
  bool fibered = false;
  std::string provenance;
};

// T^3 with loops m1, m2, m3; SW = 1.
ThreeManifold three_torus();

// Sigma_g x S^1. The polynomial basis is the single direction t carrying
// (t - t^-1)^(2g-2); b1 records the full 2g + 1.
ThreeManifold surface_times_circle(std::int64_t genus);

// Glues the complement of `knot` along the loop `meridian`; multiplies the
// polynomial by Delta_K(meridian^2).
ThreeManifold fiber_sum_with_knot(const ThreeManifold& m, const KnotRecord& knot,
                                  const std::string& meridian);

// Hypotheses needed before a fold may be read as the invariant of a free
// circle action: nonzero Euler class and b_+ = b1 - 1 >= 2.
struct Applicability {
  bool chi_nonzero = false;
  std::int64_t b_plus = 0;

  bool b_plus_ok() const { return b_plus >= 2; }
  bool passes() const { return chi_nonzero && b_plus_ok(); }
  std::string summary() const;
};

Applicability fold_hypotheses(const ThreeManifold& m,
                                  const ExponentVector& chi);

}  // namespace swfold
