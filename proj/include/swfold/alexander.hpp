#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swfold/laurent.hpp"

namespace swfold {

// Square integer matrix presenting a knot's Seifert form. The 0x0 matrix
// presents the unknot.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  // Throws StructuralError for ragged or non-square input.
  explicit SeifertMatrix(std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept {
    return rows_;
  }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// The single-variable basis {t} all Alexander polynomials live over.
const Basis& alexander_basis();

// det(tV - V^T), returned as coefficients of t^0, t^1, ..., t^size.
std::vector<std::int64_t> seifert_determinant(const SeifertMatrix& v);

// Symmetrized Alexander polynomial, normalized so that conjugate(D) = D and
// D(1) = 1. Throws NotAKnotError unless det(V - V^T) = +-1.
LaurentPoly alexander_from_seifert(const SeifertMatrix& v);

struct AlexanderCheck {
  bool symmetric = false;
  Coefficient value_at_one = 0;

  bool unit_at_one() const { return value_at_one == 1 || value_at_one == -1; }
  bool passes() const { return symmetric && unit_at_one(); }
};

// Checks a user-supplied polynomial. Structural error if not one-variable.
AlexanderCheck validate_alexander(const LaurentPoly& p);

struct KnotRecord {
  std::string name;
  std::optional<SeifertMatrix> seifert;
  LaurentPoly alexander;
  bool fibered = false;
};

KnotRecord make_knot(std::string name, SeifertMatrix seifert, bool fibered);
// Registration path that bypasses the Seifert matrix. The polynomial must
// pass validate_alexander; a value of -1 at t = 1 is flipped to +1.
KnotRecord make_knot(std::string name, const LaurentPoly& alexander,
                     bool fibered);

class KnotTable {
 public:
  // Empty table.
  KnotTable() = default;

  // 3_1, 4_1 and 5_2.
  static KnotTable with_builtins();

  // Throws StructuralError if the name is taken.
  void add(KnotRecord record);
  // Throws LookupError listing the known names.
  const KnotRecord& lookup(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, KnotRecord> records_;
};

// Lookup in the shipped table.
KnotRecord knot_lookup(const std::string& name);

// Startup self-check of the shipped table; returns one message per failure.
std::vector<std::string> validate_builtin_table();

}  // namespace swfold
