#include "gwis/scalar.hpp"

#include "gwis/error.hpp"

namespace gwis {

Scalar::Scalar(const Rational& constant) : constant_(constant) { constant_.canonicalize(); }

Scalar Scalar::unknown(int index, const Rational& coeff) {
  Scalar s;
  s.set(index, coeff);
  return s;
}

Rational Scalar::coefficient(int index) const {
  auto it = unknowns_.find(index);
  return it == unknowns_.end() ? Rational(0) : it->second;
}

bool Scalar::is_pure_unknown() const noexcept {
  return constant_ == 0 && unknowns_.size() == 1 && unknowns_.begin()->second == 1;
}

void Scalar::set(int index, Rational value) {
  value.canonicalize();
  if (value == 0)
    unknowns_.erase(index);
  else
    unknowns_[index] = std::move(value);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s *= Rational(-1);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [k, q] : rhs.unknowns_) set(k, coefficient(k) + q);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [k, q] : rhs.unknowns_) set(k, coefficient(k) - q);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& factor) {
  if (factor == 0) {
    *this = Scalar();
    return *this;
  }
  constant_ *= factor;
  for (auto& [k, q] : unknowns_) q *= factor;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (b.is_rational()) return a * b.constant();
  if (a.is_rational()) return b * a.constant();
  throw DomainError("product of two non-constant linear forms is not linear");
}

bool Scalar::operator==(const Scalar& other) const {
  return constant_ == other.constant_ && unknowns_ == other.unknowns_;
}

Rational evaluate(const Scalar& s, const std::map<int, Rational>& assignment) {
  Rational out = s.constant();
  for (const auto& [k, q] : s.unknowns()) {
    auto it = assignment.find(k);
    if (it == assignment.end()) throw MissingUnknownError(k);
    out += q * it->second;
  }
  out.canonicalize();
  return out;
}

}  // namespace gwis
