#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "swfold/fold.hpp"
#include "swfold/manifolds.hpp"

namespace swfold {

// A symplectic 4-manifold with b_+ >= 2 has a class with invariant +-1, so a
// polynomial without unit coefficients obstructs symplectic structures of
// either orientation.
struct ObstructionReport {
  std::string source;
  std::vector<ExponentVector> unit_classes;
  bool obstructed = true;
  bool fibered_orbit = false;
};

ObstructionReport taubes_report(const FoldedSW& folded,
                                const ThreeManifold& meta);
// M x S^1, whose invariant is SW3(M) itself.
ObstructionReport taubes_report_product(const ThreeManifold& m);

struct SearchEntry {
  EulerClass chi;
  bool obstructed = true;
  bool injective = false;
  std::vector<ExponentVector> unit_classes;
  // Sorted coefficient multiset of the folded polynomial, e.g. "{-6,4,9}".
  std::string digest;
};

struct SearchResult {
  std::int64_t box = 0;
  std::vector<SearchEntry> entries;
  bool all_obstructed = true;
};

struct SearchOptions {
  // Reuse the unfolded coefficients when the fold is injective.
  bool fast_path = true;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Every nonzero chi with coordinates in [-box, box], one per {chi, -chi}
// (first nonzero coordinate positive), in lexicographic order.
std::vector<ExponentVector> euler_candidates(std::size_t rank,
                                             std::int64_t box);

// Throws DomainError for box < 1, HypothesisError when b_+ < 2.
SearchResult euler_search(const ThreeManifold& m, std::int64_t box,
                          const SearchOptions& options = {});

std::string coefficient_digest(const LaurentPoly& p);

struct StabilizationNote {
  std::int64_t box = 0;
  // Euler classes (first nonzero coordinate positive) whose fold is not
  // injective on the support. Every other class folds injectively.
  std::vector<ExponentVector> colliding;
  std::int64_t max_colliding_coordinate = 0;
  std::set<Coefficient> unfolded_coefficients;
  bool unfolded_has_units = false;

  bool box_covers_collisions() const { return max_colliding_coordinate <= box; }
  std::string text(const Basis& basis) const;
};

StabilizationNote stabilization_note(const ThreeManifold& m, std::int64_t box);

}  // namespace swfold
