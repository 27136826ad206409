// Acceptance checks, one line per criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "gwis/data.hpp"
#include "gwis/error.hpp"
#include "gwis/format.hpp"
#include "gwis/linsys.hpp"
#include "gwis/strata.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace gwis;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::set<int>& s) {
  std::string out;
  for (int k : s) out += (out.empty() ? "" : ",") + std::to_string(k);
  return "{" + out + "}";
}

Outcome solution_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    Assignment s = solve_normalized(assemble_matrix(equations()));
    o.pass = s == testing::published_table();
    o.detail = o.pass ? "exact match" : "solution differs from the table";
  } catch (const SolveError& e) {
    o.detail = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.pass = false;
  std::ostringstream t;
  t.precision(3);
  t << secs;
  o.detail += "; " + t.str() + " s";
  return o;
}

Outcome residual_annihilation() {
  const auto table = testing::published_table();
  auto res = residuals(equations(), table);
  std::set<int> nonzero;
  for (const auto& [ordinal, r] : res)
    if (r != 0) nonzero.insert(ordinal);
  const bool hand1 = table.at(2) + table.at(4) == 0;
  const bool hand2 = 3 * table.at(3) - Rational(5, 72) + table.at(6) / 24 == 0;
  Outcome o;
  o.pass = res.size() == kEquationCount && nonzero.empty() && hand1 && hand2 && res.at(1) == 0 && res.at(2) == 0;
  o.detail = std::to_string(res.size() - nonzero.size()) + "/" + std::to_string(res.size()) +
             " residuals zero; nonzero at " + join(nonzero);
  for (int k : nonzero) o.detail += "; r" + std::to_string(k) + " = " + to_string(res.at(k));
  o.detail += std::string("; hand checks ") + (hand1 && hand2 ? "hold" : "fail");
  return o;
}

Outcome uniqueness() {
  const RationalMatrix m = assemble_matrix(equations());
  const RankKernel gj = rank_and_kernel(m), ff = rank_and_kernel_fraction_free(m);
  const bool agree = gj.rank == ff.rank && testing::same_span(gj.kernel, ff.kernel, m.cols());
  Outcome o;
  o.pass = agree && gj.rank == 29 && gj.kernel_dimension() == 1;
  o.detail = "rank " + std::to_string(gj.rank) + " (fraction-free " + std::to_string(ff.rank) + "), kernel dimension " +
             std::to_string(gj.kernel_dimension()) + ", paths " + (agree ? "agree" : "disagree");
  return o;
}

Outcome theorem_cross_check() {
  const auto& cat = Catalog::builtin();
  const auto table = testing::published_table();
  // Direct comparison, independent of the report code.
  std::set<int> direct, mismatched;
  for (int k = 2; k <= kBasisSize; ++k) {
    const Rational& printed = cat.theorem_coefficients().at(k);
    const Rational& c = table.at(k);
    if (abs(c) != printed) mismatched.insert(k);
    if (c != 0 && printed != 0 && (c < 0) != (printed < 0)) direct.insert(k);
  }
  const bool specials = cat.theorem_coefficients().at(21) == 0 && table.at(21) == 0 &&
                        cat.theorem_coefficients().at(30) == Rational(1, 53760) &&
                        equal(cat.basis(21), parse_term("<x m1 m2 m3>_1<m1 m2 m3>"));
  const VerificationReport rep = verify();
  Outcome o;
  o.pass = mismatched.empty() && specials && rep.theorem_sign_flips == direct;
  o.detail = std::to_string(29 - mismatched.size()) + "/29 magnitudes match; sign flips " +
             join(rep.theorem_sign_flips) + (rep.theorem_sign_flips == direct ? " (agrees with direct comparison)" : " (direct " + join(direct) + ")");
  return o;
}

Outcome canonicalization_suite() {
  std::mt19937_64 rng(20240601);
  const testing::TermShape shape{};
  long failures = 0;
  const int n = 10000;
  for (int t = 0; t < n; ++t) {
    const Term a = testing::random_term(rng, shape);
    const Term c = canonicalize(a);
    if (!(canonicalize(c) == c)) ++failures;
    if (!(canonicalize(testing::rename_dummies(a, rng)) == c)) ++failures;
    if (!(canonicalize(testing::shuffle_term(a, rng)) == c)) ++failures;
    if (!equal(swap_ij(swap_ij(a)), a)) ++failures;
    const Expression e = Expression::of(a, testing::random_scalar(rng)) + Expression::of(swap_ij(a), Scalar(2));
    const Expression s = symmetrize_ij(e);
    if (!(symmetrize_ij(s) == s)) ++failures;
  }
  int collisions = 0;
  for (int a = 1; a <= kBasisSize; ++a)
    for (int b = a + 1; b <= kBasisSize; ++b) collisions += equal(basis(a), basis(b));
  Outcome o;
  o.pass = failures == 0 && collisions == 0;
  o.detail = std::to_string(n) + " random terms, " + std::to_string(failures) + " failures; " +
             std::to_string(collisions) + " basis collisions";
  return o;
}

Outcome round_trip_suite() {
  long checked = 0, failures = 0;
  auto check = [&](const Expression& e) {
    ++checked;
    try {
      if (!(parse_expression(print(e, Format::plain)) == e)) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  };
  for (int k = 1; k <= kBasisSize; ++k) check(Expression::of(basis(k)));
  for (const auto& eq : equations()) check(Expression::of(eq.basis_label));
  check(theorem_rhs());
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10000; ++t) check(testing::random_expression(rng));
  Outcome o;
  o.pass = failures == 0 && checked == 30 + 49 + 1 + 10000;
  o.detail = std::to_string(checked) + " expressions, " + std::to_string(failures) + " failures";
  return o;
}

Outcome negative_controls() {
  const auto table = testing::published_table();
  const auto& eqs = equations();
  int undetected = 0;
  for (int k = 1; k <= kBasisSize; ++k) {
    Assignment bumped = table;
    bumped[k] += 1;
    bool seen = false;
    for (const auto& [ordinal, r] : residuals(eqs, bumped)) seen = seen || r != 0;
    undetected += !seen;
  }

  const std::string text(*embedded_file("equations.json"));
  auto rejected = [](const std::string& contents) {
    testing::TempDir dir;
    dir.write("equations.json", contents);
    try {
      (void)load_equations(DataSource(dir.path()));
      return false;
    } catch (const DataIntegrityError&) {
      return true;
    }
  };
  std::string dropped = text;
  {
    auto b = dropped.find("{\"ordinal\": 23,");
    dropped.erase(b, dropped.find('\n', b) - b + 1);
  }
  std::string nonhom = text;
  nonhom.replace(nonhom.find("\"const\": \"0\""), 12, "\"const\": \"3\"");
  const bool drop_ok = rejected(dropped), nonhom_ok = rejected(nonhom);

  Outcome o;
  o.pass = undetected == 0 && drop_ok && nonhom_ok;
  o.detail = std::to_string(kBasisSize - undetected) + "/30 perturbations detected; deletion " +
             (drop_ok ? "rejected" : "accepted") + "; non-homogeneous form " + (nonhom_ok ? "rejected" : "accepted");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"solution reproduction", solution_reproduction},
      {"residual annihilation", residual_annihilation},
      {"uniqueness", uniqueness},
      {"theorem cross-check", theorem_cross_check},
      {"canonicalization properties", canonicalization_suite},
      {"round trip", round_trip_suite},
      {"negative controls", negative_controls},
  };
  int failed = 0, number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << number << ". " << name << ": " << o.detail << "\n";
  }
  std::cout << (number - failed) << "/" << number << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
