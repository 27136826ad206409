#include "gwis/linsys.hpp"

#include "gwis/error.hpp"
#include "gwis/format.hpp"
#include "json_util.hpp"

#include <algorithm>

namespace gwis {

// ---------------------------------------------------------------------------
// Equation data

std::vector<ConstraintEquation> parse_equations_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw DataIntegrityError(std::string("equations: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("equations") || !j.at("equations").is_array())
    throw DataIntegrityError("equations: expected {\"equations\": [...]}");

  std::vector<ConstraintEquation> out;
  for (const auto& e : j.at("equations")) {
    std::string where = "equations[" + std::to_string(out.size()) + "]: ";
    if (!e.is_object() || !e.contains("ordinal") || !e.contains("label") || !e.contains("form"))
      throw DataIntegrityError(where + "needs ordinal, label and form");
    if (!e.at("ordinal").is_number_integer() || !e.at("label").is_string())
      throw DataIntegrityError(where + "ordinal must be an integer and label a string");

    ConstraintEquation eq;
    eq.ordinal = e.at("ordinal").get<int>();
    if (eq.ordinal != static_cast<int>(out.size()) + 1)
      throw DataIntegrityError(where + "ordinal " + std::to_string(eq.ordinal) + " out of sequence");
    try {
      eq.basis_label = canonicalize(parse_term(e.at("label").get<std::string>()));
    } catch (const Error& ex) {
      throw DataIntegrityError(where + "bad label: " + ex.what());
    }
    if (count_label(eq.basis_label, LabelKind::half_edge_i) + count_label(eq.basis_label, LabelKind::half_edge_j) == 0)
      throw DataIntegrityError(where + "label carries neither half-edge i nor j");
    try {
      eq.form = detail::scalar_from_json(e.at("form"));
    } catch (const std::invalid_argument& ex) {
      throw DataIntegrityError(where + "bad form: " + ex.what());
    }
    if (eq.form.constant() != 0)
      throw DataIntegrityError(where + "form is not homogeneous (constant " + to_string(eq.form.constant()) + ")");
    if (e.contains("note") && e.at("note").is_string()) eq.note = e.at("note").get<std::string>();
    out.push_back(std::move(eq));
  }
  if (out.size() != kEquationCount)
    throw DataIntegrityError("equations: expected " + std::to_string(kEquationCount) + " equations, found " +
                             std::to_string(out.size()));
  return out;
}

std::vector<ConstraintEquation> load_equations(const DataSource& source) {
  return parse_equations_json(source.read("equations.json"));
}

const std::vector<ConstraintEquation>& equations() {
  static const std::vector<ConstraintEquation> eqs = load_equations(DataSource::embedded());
  return eqs;
}

// ---------------------------------------------------------------------------
// Matrices

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
  return out;
}

RationalMatrix assemble_matrix(std::span<const ConstraintEquation> eqs, std::size_t unknowns) {
  RationalMatrix m(eqs.size(), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [k, q] : eqs[r].form.unknowns()) {
      if (k < 1 || static_cast<std::size_t>(k) > unknowns)
        throw DomainError("unknown c" + std::to_string(k) + " outside the matrix");
      m(r, static_cast<std::size_t>(k - 1)) = q;
    }
  return m;
}

RankKernel rank_and_kernel(const RationalMatrix& input) {
  RationalMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    mpz_class best_mag;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      mpz_class mag = abs(a(i, c).get_num());
      if (best == rows || mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(best, k));

    Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

RankKernel rank_and_kernel_fraction_free(const RationalMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t k = 0; k < cols; ++k) scale = lcm(scale, input(i, k).get_den());
    for (std::size_t k = 0; k < cols; ++k) m[i][k] = input(i, k).get_num() * (scale / input(i, k).get_den());
  }

  // Bareiss: after each step every entry below the pivot rows is a minor of
  // the integer matrix, so the division by the previous pivot is exact.
  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class t = m[r][c] * m[i][k] - m[i][c] * m[r][k];
        mpz_divexact(m[i][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = pivot_cols.size(); i-- > 0;) {
      const std::size_t pc = pivot_cols[i];
      Rational acc = 0;
      for (std::size_t k = pc + 1; k < cols; ++k)
        if (m[i][k] != 0 && v[k] != 0) acc += Rational(m[i][k]) * v[k];
      v[pc] = -acc / Rational(m[i][pc]);
      v[pc].canonicalize();
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Assignment solve_normalized(const RationalMatrix& m, int pivot, const Rational& value) {
  if (pivot < 1 || static_cast<std::size_t>(pivot) > m.cols())
    throw std::out_of_range("pivot c" + std::to_string(pivot) + " outside the matrix");
  auto rk = rank_and_kernel(m);
  if (rk.kernel_dimension() != 1)
    throw SolveError("no unique normalized solution: rank " + std::to_string(rk.rank) + ", kernel dimension " +
                     std::to_string(rk.kernel_dimension()));
  const auto& g = rk.kernel.front();
  const Rational& at = g[static_cast<std::size_t>(pivot - 1)];
  if (at == 0)
    throw SolveError("normalization impossible: kernel generator vanishes at c" + std::to_string(pivot));
  Rational scale = value / at;
  Assignment out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    Rational q = g[k] * scale;
    q.canonicalize();
    out[static_cast<int>(k + 1)] = q;
  }
  return out;
}

std::map<int, Rational> residuals(std::span<const ConstraintEquation> eqs, const Assignment& assignment) {
  std::map<int, Rational> out;
  for (const auto& eq : eqs) out[eq.ordinal] = evaluate(eq.form, assignment);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify(const DataSource& source) {
  const Catalog catalog = Catalog::load(source);
  const auto eqs = load_equations(source);
  const auto m = assemble_matrix(eqs);

  VerificationReport rep;
  const auto gauss = rank_and_kernel(m);
  const auto bareiss = rank_and_kernel_fraction_free(m);
  rep.rank = gauss.rank;
  rep.rank_fraction_free = bareiss.rank;
  rep.kernel_dimension = gauss.kernel_dimension();
  rep.elimination_paths_agree = gauss.rank == bareiss.rank && gauss.kernel == bareiss.kernel;

  try {
    rep.solution = solve_normalized(m);
  } catch (const SolveError& ex) {
    rep.solution_error = ex.what();
  }

  const Assignment& table = catalog.solution_table();
  rep.residuals = residuals(eqs, table);

  for (int k = 1; k <= kBasisSize; ++k) rep.table_match[k] = rep.solution && rep.solution->at(k) == table.at(k);
  for (const auto& [k, printed] : catalog.theorem_coefficients()) {
    const Rational& tabulated = table.at(k);
    rep.theorem_magnitude_match[k] = magnitude(tabulated) == printed;
    if (tabulated != 0 && printed != 0 && (tabulated < 0) != (printed < 0)) rep.theorem_sign_flips.insert(k);
  }

  std::vector<std::size_t> consistent_rows;
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    if (rep.residuals.at(eqs[r].ordinal) != 0)
      rep.inconsistent_equations.push_back(eqs[r].ordinal);
    else
      consistent_rows.push_back(r);
  }
  const auto sub = m.select_rows(consistent_rows);
  const auto sub_rk = rank_and_kernel(sub);
  rep.consistent_subsystem.equations = consistent_rows.size();
  rep.consistent_subsystem.rank = sub_rk.rank;
  rep.consistent_subsystem.kernel_dimension = sub_rk.kernel_dimension();
  if (sub_rk.kernel_dimension() == 1) {
    try {
      rep.consistent_subsystem.reproduces_table = solve_normalized(sub) == table;
    } catch (const SolveError&) {
    }
  }

  auto all_true = [](const std::map<int, bool>& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second; });
  };
  bool residuals_zero =
      std::all_of(rep.residuals.begin(), rep.residuals.end(), [](const auto& kv) { return kv.second == 0; });
  rep.passed = residuals_zero && rep.rank == static_cast<std::size_t>(kBasisSize - 1) &&
               rep.kernel_dimension == 1 && rep.elimination_paths_agree && rep.solution.has_value() &&
               all_true(rep.table_match) && all_true(rep.theorem_magnitude_match);
  return rep;
}

std::string report_to_json(const VerificationReport& rep) {
  using detail::ojson;
  ojson j;
  j["pass"] = rep.passed;
  j["rank"] = rep.rank;
  j["rank_fraction_free"] = rep.rank_fraction_free;
  j["kernel_dimension"] = rep.kernel_dimension;
  j["elimination_paths_agree"] = rep.elimination_paths_agree;
  ojson res = ojson::object();
  for (const auto& [k, q] : rep.residuals) res[std::to_string(k)] = to_string(q);
  j["residuals"] = std::move(res);
  if (rep.solution) {
    ojson sol = ojson::object();
    for (const auto& [k, q] : *rep.solution) sol["c" + std::to_string(k)] = to_string(q);
    j["solution"] = std::move(sol);
  } else {
    j["solution"] = nullptr;
    j["solution_error"] = rep.solution_error;
  }
  ojson tm = ojson::object();
  for (const auto& [k, b] : rep.table_match) tm["c" + std::to_string(k)] = b;
  j["table_match"] = std::move(tm);
  ojson mm = ojson::object();
  for (const auto& [k, b] : rep.theorem_magnitude_match) mm["c" + std::to_string(k)] = b;
  j["theorem_magnitude_match"] = std::move(mm);
  j["theorem_sign_flips"] = std::vector<int>(rep.theorem_sign_flips.begin(), rep.theorem_sign_flips.end());
  j["inconsistent_equations"] = rep.inconsistent_equations;
  j["consistent_subsystem"] = {{"equations", rep.consistent_subsystem.equations},
                               {"rank", rep.consistent_subsystem.rank},
                               {"kernel_dimension", rep.consistent_subsystem.kernel_dimension},
                               {"reproduces_table", rep.consistent_subsystem.reproduces_table}};
  return j.dump(2);
}

namespace {

std::string join_ints(const auto& xs) {
  std::string out;
  for (int k : xs) out += (out.empty() ? "" : ", ") + std::to_string(k);
  return out.empty() ? "none" : out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string report_to_text(const VerificationReport& rep) {
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  std::size_t zero = static_cast<std::size_t>(
      std::count_if(rep.residuals.begin(), rep.residuals.end(), [](const auto& kv) { return kv.second == 0; }));

  line(std::string("verification: ") + (rep.passed ? "PASS" : "FAIL"));
  line("rank (rational Gauss-Jordan): " + std::to_string(rep.rank));
  line("rank (fraction-free):         " + std::to_string(rep.rank_fraction_free));
  line("kernel dimension:             " + std::to_string(rep.kernel_dimension));
  line(std::string("elimination paths agree:      ") + (rep.elimination_paths_agree ? "yes" : "no"));
  line("zero residuals at table:      " + std::to_string(zero) + "/" + std::to_string(rep.residuals.size()));
  if (!rep.solution) line("normalized solution:          none (" + rep.solution_error + ")");
  line("theorem sign flips:           " + join_ints(rep.theorem_sign_flips));
  line("inconsistent equations:       " + join_ints(rep.inconsistent_equations));
  line("consistent subsystem:         " + std::to_string(rep.consistent_subsystem.equations) + " equations, rank " +
       std::to_string(rep.consistent_subsystem.rank) + ", kernel dimension " +
       std::to_string(rep.consistent_subsystem.kernel_dimension) +
       (rep.consistent_subsystem.reproduces_table ? ", reproduces table" : ", does not reproduce table"));
  line("");
  line(pad("k", 5) + pad("solution", 14) + pad("table", 7) + "|c_k| = printed");
  for (int k = 1; k <= kBasisSize; ++k) {
    std::string sol = rep.solution ? to_string(rep.solution->at(k)) : "-";
    std::string tm = rep.table_match.count(k) && rep.table_match.at(k) ? "ok" : "--";
    std::string mm = k == 1 ? "" : (rep.theorem_magnitude_match.at(k) ? "ok" : "MISMATCH");
    if (rep.theorem_sign_flips.count(k)) mm += " (sign flipped)";
    line(pad("c" + std::to_string(k), 5) + pad(sol, 14) + pad(tm, 7) + mm);
  }
  line("");
  line(pad("eq", 5) + "residual");
  for (const auto& [k, q] : rep.residuals)
    if (q != 0) line(pad(std::to_string(k), 5) + to_string(q));
  if (zero == rep.residuals.size()) line("(all zero)");
  return out;
}

}  // namespace gwis
