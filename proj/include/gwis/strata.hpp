#pragma once

#include "gwis/data.hpp"
#include "gwis/expression.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gwis {

inline constexpr int kBasisSize = 30;

using Assignment = std::map<int, Rational>;

/// The basis strata, the Theorem relation and the tabulated solution, parsed
/// from strata.gwis, theorem.gwis and solution_table.json.
///
/// Loading checks: exactly 30 pairwise distinct valid strata; the relation's
/// left side is stratum 1 and each right-side term matches exactly one of the
/// strata 2..30 (by canonical equality, not position); the table has c1..c30
/// with c1 = -1.
class Catalog {
 public:
  static Catalog load(const DataSource& source);

  /// Catalog built from the embedded data, constructed once.
  static const Catalog& builtin();

  /// Canonical stratum k, 1 <= k <= 30; throws std::out_of_range otherwise.
  const Term& basis(int k) const;
  const std::vector<Term>& basis_terms() const noexcept { return basis_; }

  /// k such that basis(k) equals `term`, if any.
  std::optional<int> index_of(const Term& term) const;

  /// sum_k c_k * basis(k).
  Expression generic_E() const;

  /// Right-hand side of the printed relation (zero coefficient dropped).
  Expression theorem_rhs() const;
  /// Printed coefficient per stratum index 2..30, including the explicit 0.
  const std::map<int, Rational>& theorem_coefficients() const noexcept { return theorem_; }

  /// Tabulated c_1..c_30 (c_1 = -1).
  const Assignment& solution_table() const noexcept { return table_; }

 private:
  std::vector<Term> basis_;
  std::map<int, Rational> theorem_;
  Assignment table_;
};

/// Convenience accessors over Catalog::builtin().
const Term& basis(int k);
Expression generic_E();
Expression theorem_rhs();

/// Parses "k: <gwis>" lines; blank lines and '#' comments are skipped.
std::vector<Term> parse_strata_file(std::string_view text);

/// Parses {"c1": "p/q", ...}.
Assignment parse_assignment_json(std::string_view text);

}  // namespace gwis
