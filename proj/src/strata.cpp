#include "gwis/strata.hpp"

#include "gwis/error.hpp"
#include "gwis/format.hpp"

#include <json.hpp>

#include <sstream>

namespace gwis {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

std::vector<Term> parse_strata_file(std::string_view text) {
  std::map<int, Term> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    auto where = "strata line " + std::to_string(line_no) + ": ";
    auto colon = line.find(':');
    if (colon == std::string::npos) throw DataIntegrityError(where + "expected \"k: <gwis>\"");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    auto k = parse_rational(key);
    if (!k || k->get_den() != 1 || *k < 1 || key.front() == '-' || key.front() == '+')
      throw DataIntegrityError(where + "bad index '" + key + "'");
    int index = static_cast<int>(k->get_num().get_si());
    Term t;
    try {
      t = parse_term(std::string_view(line).substr(colon + 1));
      t = canonicalize(t);
    } catch (const Error& ex) {
      throw DataIntegrityError(where + ex.what());
    }
    if (!entries.emplace(index, std::move(t)).second)
      throw DataIntegrityError(where + "duplicate index " + std::to_string(index));
  }
  std::vector<Term> out;
  int expected = 1;
  for (auto& [k, t] : entries) {
    if (k != expected) throw DataIntegrityError("strata: index " + std::to_string(expected) + " missing");
    out.push_back(std::move(t));
    ++expected;
  }
  return out;
}

Assignment parse_assignment_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw DataIntegrityError(std::string("assignment: ") + ex.what());
  }
  if (!j.is_object()) throw DataIntegrityError("assignment: expected an object");
  Assignment out;
  for (const auto& [key, value] : j.items()) {
    auto k = key.size() > 1 && key[0] == 'c' ? parse_rational(key.substr(1)) : std::nullopt;
    if (!k || k->get_den() != 1 || *k < 1 || *k > kMaxUnknown || key[1] == '-' || key[1] == '+')
      throw DataIntegrityError("assignment: bad key '" + key + "'");
    auto q = value.is_string() ? parse_rational(value.get<std::string>()) : std::nullopt;
    if (!q) throw DataIntegrityError("assignment: bad value for " + key);
    out[static_cast<int>(k->get_num().get_si())] = *q;
  }
  return out;
}

Catalog Catalog::load(const DataSource& source) {
  Catalog c;
  c.basis_ = parse_strata_file(source.read("strata.gwis"));
  if (c.basis_.size() != static_cast<std::size_t>(kBasisSize))
    throw DataIntegrityError("strata: expected " + std::to_string(kBasisSize) + " entries, found " +
                             std::to_string(c.basis_.size()));
  for (std::size_t a = 0; a < c.basis_.size(); ++a)
    for (std::size_t b = a + 1; b < c.basis_.size(); ++b)
      if (c.basis_[a] == c.basis_[b])
        throw DataIntegrityError("strata " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                 " are the same stratum");

  // theorem.gwis: "<lhs> = <rhs expression>"
  std::string relation = source.read("theorem.gwis");
  std::string body;
  {
    std::istringstream in(relation);
    std::string line;
    while (std::getline(in, line)) body += strip_comment(line) + "\n";
  }
  auto eq = body.find('=');
  if (eq == std::string::npos) throw DataIntegrityError("theorem: missing '='");
  try {
    if (!equal(parse_term(std::string_view(body).substr(0, eq)), c.basis_[0]))
      throw DataIntegrityError("theorem: left side is not stratum 1");
    for (const auto& s : parse_summands(std::string_view(body).substr(eq + 1))) {
      if (!s.coefficient.is_rational() || s.coefficient.constant() < 0)
        throw DataIntegrityError("theorem: coefficients must be non-negative rationals");
      auto k = c.index_of(s.term);
      if (!k || *k == 1) throw DataIntegrityError("theorem: term " + print_term(s.term, Format::plain) +
                                                  " is not one of the strata 2.." + std::to_string(kBasisSize));
      if (!c.theorem_.emplace(*k, s.coefficient.constant()).second)
        throw DataIntegrityError("theorem: stratum " + std::to_string(*k) + " appears twice");
    }
  } catch (const DataIntegrityError&) {
    throw;
  } catch (const Error& ex) {
    throw DataIntegrityError(std::string("theorem: ") + ex.what());
  }
  if (c.theorem_.size() != static_cast<std::size_t>(kBasisSize - 1))
    throw DataIntegrityError("theorem: expected " + std::to_string(kBasisSize - 1) + " terms, found " +
                             std::to_string(c.theorem_.size()));

  c.table_ = parse_assignment_json(source.read("solution_table.json"));
  if (c.table_.size() != static_cast<std::size_t>(kBasisSize))
    throw DataIntegrityError("solution table: expected c1..c" + std::to_string(kBasisSize));
  if (c.table_.at(1) != -1) throw DataIntegrityError("solution table: c1 must be -1");
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = load(DataSource::embedded());
  return catalog;
}

const Term& Catalog::basis(int k) const {
  if (k < 1 || k > static_cast<int>(basis_.size()))
    throw std::out_of_range("stratum index " + std::to_string(k) + " outside 1.." + std::to_string(basis_.size()));
  return basis_[static_cast<std::size_t>(k - 1)];
}

std::optional<int> Catalog::index_of(const Term& term) const {
  Term key = canonicalize(term);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k] == key) return static_cast<int>(k + 1);
  return std::nullopt;
}

Expression Catalog::generic_E() const {
  Expression e;
  for (int k = 1; k <= static_cast<int>(basis_.size()); ++k) e.add(basis(k), Scalar::unknown(k));
  return e;
}

Expression Catalog::theorem_rhs() const {
  Expression e;
  for (const auto& [k, q] : theorem_) e.add(basis(k), Scalar(q));
  return e;
}

const Term& basis(int k) { return Catalog::builtin().basis(k); }
Expression generic_E() { return Catalog::builtin().generic_E(); }
Expression theorem_rhs() { return Catalog::builtin().theorem_rhs(); }

}  // namespace gwis
