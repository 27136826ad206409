#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gwis {

/// Slot kinds inside a correlator bracket. The enumerator order is the label
/// order used by canonical forms: x < i < j < dummies.
enum class LabelKind { external_x = 0, half_edge_i = 1, half_edge_j = 2, dummy = 3 };

struct Label {
  LabelKind kind = LabelKind::external_x;
  std::string name;  // only meaningful for dummies

  static Label x() { return {LabelKind::external_x, {}}; }
  static Label i() { return {LabelKind::half_edge_i, {}}; }
  static Label j() { return {LabelKind::half_edge_j, {}}; }
  static Label dummy(std::string name) { return {LabelKind::dummy, std::move(name)}; }

  bool is_dummy() const noexcept { return kind == LabelKind::dummy; }
  std::string spelling() const;

  bool operator==(const Label&) const = default;
  std::strong_ordering operator<=>(const Label& other) const;
};

/// One slot: a label carrying a psi-power (descendent exponent).
struct Insertion {
  Label label;
  unsigned psi = 0;

  bool operator==(const Insertion&) const = default;
  std::strong_ordering operator<=>(const Insertion&) const = default;
};

/// One bracket <...>_g.
struct Correlator {
  std::vector<Insertion> insertions;
  unsigned genus = 0;

  bool operator==(const Correlator&) const = default;
  std::strong_ordering operator<=>(const Correlator& other) const;
};

/// A product of correlators. Dummy labels are contracted in pairs.
struct Term {
  std::vector<Correlator> correlators;

  bool operator==(const Term&) const = default;
  std::strong_ordering operator<=>(const Term& other) const;
};

/// Human-readable list of broken rules; empty iff `term` is valid.
///
/// Rules: at least one correlator, no empty correlator, every dummy occurs
/// exactly twice across the whole term, and x, i, j each occur at most once.
std::vector<std::string> validate(const Term& term);

/// Largest number of contracted pairs canonicalize() accepts; the search
/// is exhaustive over dummy bijections.
inline constexpr std::size_t kMaxDummyPairs = 8;

/// Canonical representative of the class of `term` under dummy renaming,
/// reordering of insertions within a correlator, and reordering of
/// correlators. Dummies are renamed d1, d2, ... . Throws ValidationError
/// if validate(term) is non-empty, and Error beyond kMaxDummyPairs pairs.
Term canonicalize(const Term& term);

bool is_canonical(const Term& term);

/// canonicalize(a) == canonicalize(b).
bool equal(const Term& a, const Term& b);

/// Exchanges the half-edge labels i and j; the result is canonical.
Term swap_ij(const Term& term);

/// Number of insertions carrying `kind`.
std::size_t count_label(const Term& term, LabelKind kind);

}  // namespace gwis
