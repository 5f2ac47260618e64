#include "swfold/fold.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"

namespace swfold {

namespace {

bool all_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? checked::neg(x) : x; }

}  // namespace

EulerClass::EulerClass(Basis basis, ExponentVector chi)
    : basis_(std::move(basis)), chi_(std::move(chi)) {
  if (chi_.size() != basis_.rank()) {
    throw StructuralError("Euler class has " + std::to_string(chi_.size()) +
                          " entries for a rank " +
                          std::to_string(basis_.rank()) + " basis");
  }
  if (all_zero(chi_)) throw TorsionEulerClassError();
}

EulerClass EulerClass::parse(std::string_view text, const Basis& basis) {
  return EulerClass(basis, parse_linear_form(text, basis));
}

EulerClass EulerClass::negated() const {
  ExponentVector v(chi_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::neg(chi_[i]);
  return EulerClass(basis_, std::move(v));
}

std::string EulerClass::to_text() const {
  return linear_form_text(basis_, chi_);
}

QuotientLattice::QuotientLattice(const EulerClass& chi)
    : basis_(chi.basis()), generator_(chi.vector()) {
  while (generator_[pivot_] == 0) ++pivot_;
  if (generator_[pivot_] < 0) {
    for (auto& x : generator_) x = checked::neg(x);
  }
}

ExponentVector QuotientLattice::canonical_rep(const ExponentVector& e) const {
  if (e.size() != generator_.size()) {
    throw StructuralError("exponent length does not match quotient rank");
  }
  std::int64_t k = checked::floor_div(e[pivot_], modulus());
  ExponentVector r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    r[i] = checked::sub(e[i], checked::mul(k, generator_[i]));
  }
  return r;
}

bool QuotientLattice::is_canonical(const ExponentVector& e) const {
  return e.size() == generator_.size() && e[pivot_] >= 0 &&
         e[pivot_] < modulus();
}

LaurentPoly fold_polynomial(const LaurentPoly& p, const QuotientLattice& q) {
  if (!(p.basis() == q.basis())) {
    throw StructuralError("fold: polynomial and Euler class bases differ");
  }
  PolyBuilder b(p.basis());
  for (const auto& [e, c] : p.terms()) b.add(q.canonical_rep(e), c);
  return std::move(b).build();
}

LaurentPoly fold_bruteforce_polynomial(const LaurentPoly& p,
                                       const EulerClass& chi) {
  if (!(p.basis() == chi.basis())) {
    throw StructuralError("fold: polynomial and Euler class bases differ");
  }
  const ExponentVector& x = chi.vector();
  const std::size_t rank = x.size();
  std::vector<std::pair<ExponentVector, Coefficient>> support(
      p.terms().begin(), p.terms().end());
  const std::size_t n = support.size();

  std::int64_t width = 0;
  std::int64_t min_step = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    if (x[i] != 0 && (min_step == 0 || magnitude(x[i]) < min_step)) {
      min_step = magnitude(x[i]);
    }
    if (n == 0) continue;
    auto [lo, hi] = std::minmax_element(
        support.begin(), support.end(),
        [i](const auto& a, const auto& b) { return a.first[i] < b.first[i]; });
    width = std::max(width, checked::sub(hi->first[i], lo->first[i]));
  }
  const std::int64_t shift_bound = width / min_step + 1;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::int64_t k = -shift_bound; k <= shift_bound; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < rank && match; ++i) {
          match = support[a].first[i] - support[b].first[i] == k * x[i];
        }
        if (match) {
          parent[find(a)] = find(b);
          break;
        }
      }
    }
  }

  std::size_t pivot = 0;
  while (x[pivot] == 0) ++pivot;
  const std::int64_t modulus = magnitude(x[pivot]);

  PolyBuilder result(p.basis());
  std::vector<bool> done(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t root = find(a);
    if (done[root]) continue;
    done[root] = true;
    Coefficient sum = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (find(b) == root) sum = checked::add(sum, support[b].second);
    }

    // Scan the orbit of one member for the element with pivot entry in range.
    const ExponentVector& e = support[root].first;
    const std::int64_t scan = magnitude(e[pivot]) + 1;
    bool labelled = false;
    for (std::int64_t k = -scan; k <= scan && !labelled; ++k) {
      ExponentVector shifted(rank);
      for (std::size_t i = 0; i < rank; ++i) shifted[i] = e[i] - k * x[i];
      if (shifted[pivot] >= 0 && shifted[pivot] < modulus) {
        result.add(shifted, sum);
        labelled = true;
      }
    }
  }
  return std::move(result).build();
}

namespace {

void require_fold_hypotheses(const ThreeManifold& m, const EulerClass& chi) {
  if (!(m.basis == chi.basis())) {
    throw StructuralError("Euler class basis does not match manifold '" +
                          m.name + "'");
  }
  Applicability a = fold_hypotheses(m, chi.vector());
  if (!a.b_plus_ok()) {
    throw HypothesisError("fold of '" + m.name + "' needs b+ >= 2: " +
                          a.summary());
  }
}

}  // namespace

FoldedSW fold(const ThreeManifold& m, const EulerClass& chi) {
  require_fold_hypotheses(m, chi);
  QuotientLattice q(chi);
  LaurentPoly folded = fold_polynomial(m.sw3, q);
  return FoldedSW{std::move(q), std::move(folded), m.name};
}

FoldedSW fold_bruteforce(const ThreeManifold& m, const EulerClass& chi) {
  require_fold_hypotheses(m, chi);
  return FoldedSW{QuotientLattice(chi), fold_bruteforce_polynomial(m.sw3, chi),
                  m.name};
}

std::variant<FoldedSW, ProductCaseSW> fold_or_product(
    const ThreeManifold& m, const ExponentVector& chi) {
  if (chi.size() == m.basis.rank() && all_zero(chi)) {
    return ProductCaseSW{m.sw3, m.name};
  }
  return fold(m, EulerClass(m.basis, chi));
}

bool is_nonzero_multiple(const ExponentVector& d, const ExponentVector& chi) {
  std::size_t pivot = 0;
  while (pivot < chi.size() && chi[pivot] == 0) ++pivot;
  if (pivot == chi.size() || d[pivot] % chi[pivot] != 0) return false;
  const std::int64_t k = d[pivot] / chi[pivot];
  if (k == 0) return false;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (d[i] != checked::mul(k, chi[i])) return false;
  }
  return true;
}

bool is_injective_fold(const LaurentPoly& p, const EulerClass& chi) {
  if (!(p.basis() == chi.basis())) {
    throw StructuralError("injectivity test: bases differ");
  }
  std::vector<const ExponentVector*> support;
  for (const auto& [e, c] : p.terms()) support.push_back(&e);
  ExponentVector diff(chi.vector().size());
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = checked::sub((*support[a])[i], (*support[b])[i]);
      }
      if (is_nonzero_multiple(diff, chi.vector())) return false;
    }
  }
  return true;
}

bool is_injective_fold(const ThreeManifold& m, const EulerClass& chi) {
  return is_injective_fold(m.sw3, chi);
}

bool equal_up_to_sign(const FoldedSW& a, const FoldedSW& b) {
  if (!(a.quotient == b.quotient)) {
    throw StructuralError("cannot compare folds over different quotients");
  }
  return a.poly == b.poly || a.poly == negate(b.poly);
}

}  // namespace swfold
