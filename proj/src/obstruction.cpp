#include "swfold/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"

namespace swfold {

namespace {

bool is_unit(Coefficient c) { return c == 1 || c == -1; }

std::vector<ExponentVector> unit_exponents(const LaurentPoly& p) {
  std::vector<ExponentVector> out;
  for (const auto& [e, c] : p.terms()) {
    if (is_unit(c)) out.push_back(e);
  }
  return out;
}

std::string digest_of(std::vector<Coefficient> coeffs) {
  std::sort(coeffs.begin(), coeffs.end());
  std::string s = "{";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs[i]);
  }
  return s + "}";
}

std::vector<Coefficient> coefficients(const LaurentPoly& p) {
  std::vector<Coefficient> out;
  for (const auto& [e, c] : p.terms()) out.push_back(c);
  return out;
}

SearchEntry search_entry(const ThreeManifold& m, const EulerClass& chi,
                         bool fast_path) {
  SearchEntry entry{chi, true, is_injective_fold(m, chi), {}, {}};
  if (fast_path && entry.injective) {
    QuotientLattice q(chi);
    for (const auto& e : unit_exponents(m.sw3)) {
      entry.unit_classes.push_back(q.canonical_rep(e));
    }
    std::sort(entry.unit_classes.begin(), entry.unit_classes.end());
    entry.digest = digest_of(coefficients(m.sw3));
  } else {
    FoldedSW folded = fold(m, chi);
    entry.unit_classes = unit_exponents(folded.poly);
    entry.digest = digest_of(coefficients(folded.poly));
  }
  entry.obstructed = entry.unit_classes.empty();
  return entry;
}

ExponentVector sign_normalized(ExponentVector v) {
  auto first = std::find_if(v.begin(), v.end(),
                            [](std::int64_t x) { return x != 0; });
  if (first != v.end() && *first < 0) {
    for (auto& x : v) x = checked::neg(x);
  }
  return v;
}

}  // namespace

ObstructionReport taubes_report(const FoldedSW& folded,
                                const ThreeManifold& meta) {
  ExponentVector chi = folded.quotient.generator();
  ObstructionReport r;
  r.source = folded.source + " / chi = " +
             linear_form_text(folded.quotient.basis(), chi);
  r.unit_classes = unit_exponents(folded.poly);
  r.obstructed = r.unit_classes.empty();
  r.fibered_orbit = meta.fibered;
  return r;
}

ObstructionReport taubes_report_product(const ThreeManifold& m) {
  ObstructionReport r;
  r.source = m.name + " / chi = 0";
  r.unit_classes = unit_exponents(m.sw3);
  r.obstructed = r.unit_classes.empty();
  r.fibered_orbit = m.fibered;
  return r;
}

std::string coefficient_digest(const LaurentPoly& p) {
  return digest_of(coefficients(p));
}

std::vector<ExponentVector> euler_candidates(std::size_t rank,
                                             std::int64_t box) {
  std::vector<ExponentVector> out;
  ExponentVector v(rank, -box);
  for (;;) {
    auto first = std::find_if(v.begin(), v.end(),
                              [](std::int64_t x) { return x != 0; });
    if (first != v.end() && *first > 0) out.push_back(v);
    std::size_t i = rank;
    while (i > 0 && v[i - 1] == box) v[--i] = -box;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

SearchResult euler_search(const ThreeManifold& m, std::int64_t box,
                          const SearchOptions& options) {
  if (box < 1) {
    throw DomainError("search box must be >= 1, got " + std::to_string(box));
  }
  if (checked::sub(m.b1, 1) < 2) {
    throw HypothesisError("search over '" + m.name + "' needs b+ = b1 - 1 >= 2");
  }

  std::vector<ExponentVector> candidates = euler_candidates(m.basis.rank(), box);
  std::vector<std::optional<SearchEntry>> slots(candidates.size());

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, candidates.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      slots[i] = search_entry(m, EulerClass(m.basis, candidates[i]),
                              options.fast_path);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  result.box = box;
  for (auto& slot : slots) {
    result.all_obstructed = result.all_obstructed && slot->obstructed;
    result.entries.push_back(std::move(*slot));
  }
  return result;
}

StabilizationNote stabilization_note(const ThreeManifold& m, std::int64_t box) {
  StabilizationNote note;
  note.box = box;

  std::vector<ExponentVector> support;
  for (const auto& [e, c] : m.sw3.terms()) {
    support.push_back(e);
    note.unfolded_coefficients.insert(c);
    note.unfolded_has_units = note.unfolded_has_units || is_unit(c);
  }

  // d = k * chi forces chi = d / k with k dividing every entry of d.
  std::set<ExponentVector> colliding;
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      ExponentVector d(support[a].size());
      std::int64_t g = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = checked::sub(support[a][i], support[b][i]);
        g = std::gcd(g, d[i]);
      }
      for (std::int64_t k = 1; k <= g; ++k) {
        if (g % k != 0) continue;
        ExponentVector chi(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) chi[i] = d[i] / k;
        colliding.insert(sign_normalized(std::move(chi)));
      }
    }
  }
  note.colliding.assign(colliding.begin(), colliding.end());
  for (const auto& chi : note.colliding) {
    for (auto x : chi) {
      note.max_colliding_coordinate =
          std::max(note.max_colliding_coordinate, x < 0 ? -x : x);
    }
  }
  return note;
}

std::string StabilizationNote::text(const Basis& basis) const {
  std::string s;
  if (colliding.empty()) {
    s += "every fold injective: no two support exponents differ by a "
         "multiple of any Euler class\n";
  } else {
    s += std::to_string(colliding.size()) +
         " collision-prone Euler classes up to sign, max |coordinate| " +
         std::to_string(max_colliding_coordinate) + "; ";
    if (box_covers_collisions()) {
      s += "all lie inside box " + std::to_string(box) +
           ", so every fold outside the box is injective\n";
    } else {
      s += "outside box " + std::to_string(box) + ":";
      for (const auto& chi : colliding) {
        bool outside = std::any_of(chi.begin(), chi.end(), [&](std::int64_t x) {
          return (x < 0 ? -x : x) > box;
        });
        if (outside) s += " [" + linear_form_text(basis, chi) + "]";
      }
      s += "; every other fold outside the box is injective\n";
    }
  }

  std::vector<Coefficient> shown(unfolded_coefficients.begin(),
                                 unfolded_coefficients.end());
  std::sort(shown.begin(), shown.end(), [](Coefficient a, Coefficient b) {
    Coefficient ma = a < 0 ? -a : a;
    Coefficient mb = b < 0 ? -b : b;
    return ma != mb ? ma < mb : a < b;
  });
  s += "unfolded coefficients {";
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shown[i]);
  }
  s += "}: ";
  s += unfolded_has_units ? "has units; injective folds not obstructed"
                          : "no units; all injective folds obstructed";
  return s;
}

}  // namespace swfold
