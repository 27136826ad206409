#include "gwis/term.hpp"

#include "gwis/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace gwis {

std::string Label::spelling() const {
  switch (kind) {
    case LabelKind::external_x:
      return "x";
    case LabelKind::half_edge_i:
      return "i";
    case LabelKind::half_edge_j:
      return "j";
    case LabelKind::dummy:
      break;
  }
  return name;
}

std::strong_ordering Label::operator<=>(const Label& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  // Shorter names first so that d2 < d10.
  if (auto c = name.size() <=> other.name.size(); c != 0) return c;
  return name.compare(other.name) <=> 0;
}

std::strong_ordering Correlator::operator<=>(const Correlator& other) const {
  if (auto c = genus <=> other.genus; c != 0) return c;
  if (auto c = insertions.size() <=> other.insertions.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(insertions.begin(), insertions.end(), other.insertions.begin(),
                                                other.insertions.end());
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  return std::lexicographical_compare_three_way(correlators.begin(), correlators.end(), other.correlators.begin(),
                                                other.correlators.end());
}

std::size_t count_label(const Term& term, LabelKind kind) {
  std::size_t n = 0;
  for (const auto& c : term.correlators)
    for (const auto& ins : c.insertions)
      if (ins.label.kind == kind) ++n;
  return n;
}

std::vector<std::string> validate(const Term& term) {
  std::vector<std::string> out;
  if (term.correlators.empty()) {
    out.emplace_back("term has no correlators");
    return out;
  }
  std::map<std::string, std::size_t> dummies;
  std::size_t fixed[3] = {0, 0, 0};
  for (std::size_t k = 0; k < term.correlators.size(); ++k) {
    const auto& c = term.correlators[k];
    if (c.insertions.empty()) out.push_back("correlator " + std::to_string(k + 1) + " is empty");
    for (const auto& ins : c.insertions) {
      if (ins.label.is_dummy())
        ++dummies[ins.label.name];
      else
        ++fixed[static_cast<int>(ins.label.kind)];
    }
  }
  for (const auto& [name, n] : dummies) {
    if (n == 1)
      out.push_back("free dummy " + name + " (occurs once)");
    else if (n > 2)
      out.push_back("dummy " + name + " occurs " + std::to_string(n) + " times");
  }
  const char* names[3] = {"x", "i", "j"};
  for (int k = 0; k < 3; ++k)
    if (fixed[k] > 1) out.push_back(std::string("label ") + names[k] + " occurs " + std::to_string(fixed[k]) + " times");
  return out;
}

namespace {

// Working representation: labels as ranks x=0, i=1, j=2, d_n = 2 + n.
struct RankedCorrelator {
  unsigned genus;
  std::vector<std::pair<std::uint64_t, unsigned>> insertions;  // (rank, psi)
};

bool correlator_less(const RankedCorrelator& a, const RankedCorrelator& b) {
  if (a.genus != b.genus) return a.genus < b.genus;
  if (a.insertions.size() != b.insertions.size()) return a.insertions.size() < b.insertions.size();
  return a.insertions < b.insertions;
}

// Token stream compared across dummy bijections. A psi token sorts below
// every label token.
constexpr std::uint64_t kLabelToken = std::uint64_t{1} << 40;

std::vector<std::uint64_t> encode(const std::vector<RankedCorrelator>& cs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cs) {
    out.push_back(0);
    out.push_back(c.genus);
    out.push_back(c.insertions.size());
    for (const auto& [rank, psi] : c.insertions) {
      out.push_back(kLabelToken + rank);
      if (psi > 0) out.push_back(1 + static_cast<std::uint64_t>(psi));
    }
  }
  return out;
}

}  // namespace

Term canonicalize(const Term& term) {
  if (auto v = validate(term); !v.empty()) throw ValidationError(std::move(v));

  std::vector<std::string> dummy_names;
  for (const auto& c : term.correlators)
    for (const auto& ins : c.insertions)
      if (ins.label.is_dummy() &&
          std::find(dummy_names.begin(), dummy_names.end(), ins.label.name) == dummy_names.end())
        dummy_names.push_back(ins.label.name);

  if (dummy_names.size() > kMaxDummyPairs)
    throw Error("term has " + std::to_string(dummy_names.size()) + " contracted pairs; at most " +
                std::to_string(kMaxDummyPairs) + " are supported");

  auto dummy_slot = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(dummy_names.begin(), dummy_names.end(), name) - dummy_names.begin());
  };

  std::vector<std::size_t> perm(dummy_names.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::vector<std::uint64_t> best_code;
  std::vector<RankedCorrelator> best;
  bool first = true;
  do {
    std::vector<RankedCorrelator> work;
    work.reserve(term.correlators.size());
    for (const auto& c : term.correlators) {
      RankedCorrelator rc{c.genus, {}};
      rc.insertions.reserve(c.insertions.size());
      for (const auto& ins : c.insertions) {
        std::uint64_t rank = ins.label.is_dummy() ? 3 + perm[dummy_slot(ins.label.name)]
                                                  : static_cast<std::uint64_t>(ins.label.kind);
        rc.insertions.emplace_back(rank, ins.psi);
      }
      std::sort(rc.insertions.begin(), rc.insertions.end());
      work.push_back(std::move(rc));
    }
    std::sort(work.begin(), work.end(), correlator_less);
    auto code = encode(work);
    if (first || code < best_code) {
      best_code = std::move(code);
      best = std::move(work);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Term out;
  out.correlators.reserve(best.size());
  for (const auto& rc : best) {
    Correlator c;
    c.genus = rc.genus;
    for (const auto& [rank, psi] : rc.insertions) {
      Label label = rank < 3 ? Label{static_cast<LabelKind>(rank), {}} : Label::dummy("d" + std::to_string(rank - 2));
      c.insertions.push_back({std::move(label), psi});
    }
    out.correlators.push_back(std::move(c));
  }
  return out;
}

bool is_canonical(const Term& term) { return validate(term).empty() && canonicalize(term) == term; }

bool equal(const Term& a, const Term& b) { return canonicalize(a) == canonicalize(b); }

Term swap_ij(const Term& term) {
  Term t = term;
  for (auto& c : t.correlators)
    for (auto& ins : c.insertions) {
      if (ins.label.kind == LabelKind::half_edge_i)
        ins.label.kind = LabelKind::half_edge_j;
      else if (ins.label.kind == LabelKind::half_edge_j)
        ins.label.kind = LabelKind::half_edge_i;
    }
  return canonicalize(t);
}

}  // namespace gwis
