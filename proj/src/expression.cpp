#include "gwis/expression.hpp"

namespace gwis {

Expression Expression::of(const Term& term, const Scalar& coefficient) {
  Expression e;
  e.add(term, coefficient);
  return e;
}

void Expression::add(const Term& term, const Scalar& coefficient) {
  if (coefficient.is_zero()) {
    canonicalize(term);  // still reject invalid terms
    return;
  }
  add_canonical(canonicalize(term), coefficient);
}

void Expression::add_canonical(const Term& key, const Scalar& coefficient) {
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Expression& Expression::operator+=(const Expression& rhs) {
  for (const auto& [t, s] : rhs.terms_) add_canonical(t, s);
  return *this;
}

Expression& Expression::operator-=(const Expression& rhs) {
  for (const auto& [t, s] : rhs.terms_) add_canonical(t, -s);
  return *this;
}

Expression& Expression::operator*=(const Scalar& factor) {
  Map scaled;
  for (const auto& [t, s] : terms_) {
    Scalar p = s * factor;
    if (!p.is_zero()) scaled.emplace(t, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

Expression combine(const Scalar& a, const Expression& e1, const Scalar& b, const Expression& e2) {
  return a * e1 + b * e2;
}

Scalar coefficient_of(const Expression& e, const Term& term) {
  auto it = e.terms().find(canonicalize(term));
  return it == e.terms().end() ? Scalar() : it->second;
}

Expression swap_ij(const Expression& e) {
  Expression out;
  for (const auto& [t, s] : e.terms()) out.add(swap_ij(t), s);
  return out;
}

Expression symmetrize_ij(const Expression& e) {
  return combine(Scalar(Rational(1, 2)), e, Scalar(Rational(1, 2)), swap_ij(e));
}

}  // namespace gwis
