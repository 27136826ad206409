#pragma once

#include "gwis/scalar.hpp"
#include "gwis/term.hpp"

#include <map>

namespace gwis {

/// Finite linear combination of canonical terms with Scalar coefficients.
/// The empty expression is zero.
class Expression {
 public:
  using Map = std::map<Term, Scalar>;

  Expression() = default;

  /// Single term; `term` is canonicalized.
  static Expression of(const Term& term, const Scalar& coefficient = Scalar(1));

  /// Adds `coefficient * term`, canonicalizing and dropping cancelled entries.
  void add(const Term& term, const Scalar& coefficient);

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Expression& operator+=(const Expression& rhs);
  Expression& operator-=(const Expression& rhs);
  Expression& operator*=(const Scalar& factor);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Scalar& s, Expression e) { return e *= s; }

  bool operator==(const Expression&) const = default;

 private:
  // Keys are canonical terms already.
  void add_canonical(const Term& key, const Scalar& coefficient);

  Map terms_;
};

/// a*e1 + b*e2.
Expression combine(const Scalar& a, const Expression& e1, const Scalar& b, const Expression& e2);

/// Coefficient of canonicalize(term) in e; zero when absent.
Scalar coefficient_of(const Expression& e, const Term& term);

Expression swap_ij(const Expression& e);

/// (e + swap_ij(e)) / 2.
Expression symmetrize_ij(const Expression& e);

}  // namespace gwis
