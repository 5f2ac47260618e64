#include "swfold/alexander.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "swfold/checked.hpp"
#include "swfold/error.hpp"

namespace swfold {

namespace {

// Dense integer polynomial in t, index = degree. Only used for the
// fraction-free determinant below.
using DensePoly = std::vector<std::int64_t>;

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = checked::add(r[i + j], checked::mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

DensePoly dense_sub(const DensePoly& a, const DensePoly& b) {
  DensePoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked::sub(r[i], b[i]);
  trim(r);
  return r;
}

// a / b where the division is known to be exact.
DensePoly dense_exact_div(DensePoly a, const DensePoly& b) {
  trim(a);
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact division");
  DensePoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw std::logic_error("inexact division");
    q[k] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[k + j] = checked::sub(a[k + j], checked::mul(q[k], b[j]));
    }
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("inexact division");
  trim(q);
  return q;
}

struct BuiltinKnot {
  const char* name;
  std::vector<std::vector<std::int64_t>> seifert;
  bool fibered;
  // Expected symmetrized coefficients of t^-1, t^0, t^1.
  std::vector<std::int64_t> expected;
};

const std::vector<BuiltinKnot>& builtin_knots() {
  static const std::vector<BuiltinKnot> knots = {
      {"3_1", {{-1, 1}, {0, -1}}, true, {1, -1, 1}},
      {"4_1", {{1, 1}, {0, -1}}, true, {-1, 3, -1}},
      {"5_2", {{1, 1}, {0, 2}}, false, {2, -3, 2}},
  };
  return knots;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<std::int64_t>> rows)
    : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) {
      throw StructuralError("Seifert matrix must be square");
    }
  }
}

const Basis& alexander_basis() {
  static const Basis basis{"t"};
  return basis;
}

std::vector<std::int64_t> seifert_determinant(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  if (n == 0) return {1};

  // Entries of tV - V^T.
  std::vector<std::vector<DensePoly>> m(n, std::vector<DensePoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = {checked::neg(v(j, i)), v(i, j)};
      trim(m[i][j]);
    }
  }

  // Bareiss elimination; every division is exact over Z[t].
  bool negative = false;
  DensePoly previous{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].empty()) ++swap_row;
      if (swap_row == n) return {0};
      std::swap(m[k], m[swap_row]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        DensePoly num = dense_sub(dense_mul(m[i][j], m[k][k]),
                                  dense_mul(m[i][k], m[k][j]));
        m[i][j] = dense_exact_div(std::move(num), previous);
      }
    }
    previous = m[k][k];
  }
  DensePoly det = m[n - 1][n - 1];
  if (det.empty()) return {0};
  if (negative) {
    for (auto& c : det) c = checked::neg(c);
  }
  return det;
}

LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  std::vector<std::int64_t> det = seifert_determinant(v);

  Coefficient at_one = 0;
  for (auto c : det) at_one = checked::add(at_one, c);
  if (at_one != 1 && at_one != -1) {
    throw NotAKnotError("not a knot Seifert matrix: det(V - V^T) = " +
                        std::to_string(at_one));
  }

  std::size_t low = 0;
  while (det[low] == 0) ++low;
  std::size_t high = det.size() - 1;
  if ((high - low) % 2 != 0) {
    throw NotAKnotError("not a knot Seifert matrix: odd degree span");
  }
  const auto shift = static_cast<std::int64_t>((low + high) / 2);

  PolyBuilder b(alexander_basis());
  for (std::size_t d = low; d <= high; ++d) {
    b.add({static_cast<std::int64_t>(d) - shift}, at_one * det[d]);
  }
  return std::move(b).build();
}

AlexanderCheck validate_alexander(const LaurentPoly& p) {
  if (p.basis().rank() != 1) {
    throw StructuralError("Alexander polynomial must have one variable");
  }
  return AlexanderCheck{conjugate(p) == p, eval_ones(p)};
}

KnotRecord make_knot(std::string name, SeifertMatrix seifert, bool fibered) {
  LaurentPoly alexander = alexander_from_seifert(seifert);
  return KnotRecord{std::move(name), std::move(seifert), std::move(alexander),
                    fibered};
}

KnotRecord make_knot(std::string name, const LaurentPoly& alexander,
                     bool fibered) {
  AlexanderCheck check = validate_alexander(alexander);
  if (!check.symmetric) {
    throw DomainError("knot '" + name +
                      "': Alexander polynomial is not symmetric");
  }
  if (!check.unit_at_one()) {
    throw DomainError("knot '" + name + "': Alexander polynomial has value " +
                      std::to_string(check.value_at_one) +
                      " at t = 1, expected +1 or -1");
  }
  LaurentPoly normalized =
      check.value_at_one == 1 ? alexander : negate(alexander);
  // Re-home onto the shared basis so products with other knots line up.
  LaurentPoly rehomed(alexander_basis(), normalized.terms());
  return KnotRecord{std::move(name), std::nullopt, std::move(rehomed),
                    fibered};
}

KnotTable KnotTable::with_builtins() {
  KnotTable table;
  for (const auto& k : builtin_knots()) {
    table.add(make_knot(k.name, SeifertMatrix(k.seifert), k.fibered));
  }
  return table;
}

void KnotTable::add(KnotRecord record) {
  std::string name = record.name;
  if (name.empty()) throw StructuralError("knot name must be nonempty");
  if (!records_.try_emplace(name, std::move(record)).second) {
    throw StructuralError("knot '" + name + "' is already registered");
  }
}

const KnotRecord& KnotTable::lookup(const std::string& name) const {
  auto it = records_.find(name);
  if (it != records_.end()) return it->second;
  std::string known;
  for (const auto& [n, r] : records_) known += (known.empty() ? "" : ", ") + n;
  throw LookupError("unknown knot '" + name + "' (available: " + known + ")");
}

bool KnotTable::contains(const std::string& name) const {
  return records_.count(name) != 0;
}

std::vector<std::string> KnotTable::names() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : records_) out.push_back(n);
  return out;
}

KnotRecord knot_lookup(const std::string& name) {
  static const KnotTable table = KnotTable::with_builtins();
  return table.lookup(name);
}

std::vector<std::string> validate_builtin_table() {
  std::vector<std::string> failures;
  for (const auto& k : builtin_knots()) {
    try {
      LaurentPoly d = alexander_from_seifert(SeifertMatrix(k.seifert));
      AlexanderCheck check = validate_alexander(d);
      if (!check.symmetric) failures.push_back(std::string(k.name) + ": not symmetric");
      if (check.value_at_one != 1) {
        failures.push_back(std::string(k.name) + ": value at 1 is " +
                           std::to_string(check.value_at_one));
      }
      for (std::int64_t e = -1; e <= 1; ++e) {
        if (d.coefficient({e}) != k.expected[static_cast<std::size_t>(e + 1)]) {
          failures.push_back(std::string(k.name) +
                             ": unexpected coefficient of t^" +
                             std::to_string(e));
        }
      }
    } catch (const Error& err) {
      failures.push_back(std::string(k.name) + ": " + err.what());
    }
  }
  return failures;
}

}  // namespace swfold
