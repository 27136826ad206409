#pragma once

#include "gwis/rational.hpp"

#include <map>

namespace gwis {

/// Highest unknown index c_k accepted by the parsers.
inline constexpr int kMaxUnknown = 30;

/// Rational-linear form  constant + sum_k coeffs[k] * c_k.  Zero
/// coefficients are never stored, so structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Scalar(long constant) : Scalar(Rational(constant)) {}  // NOLINT

  static Scalar unknown(int index, const Rational& coeff = 1);

  const Rational& constant() const noexcept { return constant_; }
  const std::map<int, Rational>& unknowns() const noexcept { return unknowns_; }

  /// Coefficient of c_k (zero when absent).
  Rational coefficient(int index) const;

  bool is_zero() const noexcept { return constant_ == 0 && unknowns_.empty(); }
  bool is_rational() const noexcept { return unknowns_.empty(); }
  /// True for exactly 1*c_k with no constant.
  bool is_pure_unknown() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Rational& factor);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& b) { return a *= b; }
  friend Scalar operator*(const Rational& a, Scalar b) { return b *= a; }

  /// Product that stays linear: throws DomainError unless one side is a
  /// pure rational.
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& other) const;

 private:
  void set(int index, Rational value);

  Rational constant_{0};
  std::map<int, Rational> unknowns_;
};

/// constant + sum q_k * assignment[k]. Throws MissingUnknownError naming the
/// first unknown with no assigned value.
Rational evaluate(const Scalar& s, const std::map<int, Rational>& assignment);

}  // namespace gwis
