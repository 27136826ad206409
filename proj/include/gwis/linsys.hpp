#pragma once

#include "gwis/data.hpp"
#include "gwis/rational.hpp"
#include "gwis/scalar.hpp"
#include "gwis/strata.hpp"
#include "gwis/term.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gwis {

inline constexpr std::size_t kEquationCount = 49;

/// One constraint: the coefficient of `basis_label` in the output of the
/// invariance operator, a homogeneous linear form in c_1..c_30.
struct ConstraintEquation {
  int ordinal = 0;
  Term basis_label;  // canonical
  Scalar form;
  std::string note;
};

/// Parses the equations.json schema:
///   {"equations": [{"ordinal": n, "label": "<gwis>",
///                   "form": {"const": "0", "unknowns": {"k": "p/q"}}}]}
/// and enforces integrity: 49 entries with ordinals 1..49 in order, zero
/// constant part, unknown indices within 1..30, labels that parse, validate
/// and contain i or j. Violations raise DataIntegrityError.
std::vector<ConstraintEquation> parse_equations_json(std::string_view text);

std::vector<ConstraintEquation> load_equations(const DataSource& source);

/// The embedded 49 equations.
const std::vector<ConstraintEquation>& equations();

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Copy keeping only the listed rows, in the given order.
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Entry (r, k-1) is the coefficient of c_k in equation r.
RationalMatrix assemble_matrix(std::span<const ConstraintEquation> eqs, std::size_t unknowns = kBasisSize);

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the right null space; each vector has cols() entries.
  std::vector<std::vector<Rational>> kernel;

  std::size_t kernel_dimension() const noexcept { return kernel.size(); }
};

/// Gauss-Jordan elimination over Q, pivoting on the entry with the largest
/// numerator magnitude in each column.
RankKernel rank_and_kernel(const RationalMatrix& m);

/// Fraction-free (Bareiss) elimination on the integer matrix obtained by
/// clearing row denominators, followed by rational back-substitution for the
/// kernel. Shares no code with rank_and_kernel().
RankKernel rank_and_kernel_fraction_free(const RationalMatrix& m);

/// The unique solution of m * c = 0 with c_{pivot} = value. Throws SolveError
/// if the kernel is not one-dimensional or its generator vanishes at `pivot`.
Assignment solve_normalized(const RationalMatrix& m, int pivot = 1, const Rational& value = Rational(-1));

/// Each equation's form evaluated at `assignment`, keyed by ordinal.
/// Throws MissingUnknownError if an unknown used by a form is unassigned.
std::map<int, Rational> residuals(std::span<const ConstraintEquation> eqs, const Assignment& assignment);

struct VerificationReport {
  std::map<int, Rational> residuals;  // at the tabulated vector
  std::size_t rank = 0;
  std::size_t rank_fraction_free = 0;
  std::size_t kernel_dimension = 0;
  bool elimination_paths_agree = false;

  std::optional<Assignment> solution;
  std::string solution_error;

  std::map<int, bool> table_match;               // solution == table, per k
  std::map<int, bool> theorem_magnitude_match;   // |table| == printed, per k >= 2
  std::set<int> theorem_sign_flips;              // k where table sign != printed sign

  /// Ordinals whose residual at the table is nonzero.
  std::vector<int> inconsistent_equations;
  /// The system restricted to the equations the table satisfies.
  struct Subsystem {
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::size_t kernel_dimension = 0;
    bool reproduces_table = false;
  } consistent_subsystem;

  bool passed = false;
};

/// Full pipeline: load -> assemble -> eliminate (both paths) -> normalize ->
/// compare against the table and the printed relation. Data problems raise
/// DataIntegrityError; mathematical failures are recorded in the report.
VerificationReport verify(const DataSource& source = DataSource::embedded());

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace gwis
