#include "gwis/format.hpp"

#include "gwis/error.hpp"
#include "json_util.hpp"

#include <cctype>
#include <limits>

namespace gwis {

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw Error("unknown format '" + std::string(name) + "' (expected plain, latex or json)");
}

namespace detail {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s) {
    auto u = static_cast<unsigned char>(ch);
    if (!(std::islower(u) || std::isdigit(u) || ch == '_')) return false;
  }
  return true;
}

Label label_from_spelling(const std::string& s) {
  if (s == "x") return Label::x();
  if (s == "i") return Label::i();
  if (s == "j") return Label::j();
  if (!is_identifier(s)) throw std::invalid_argument("bad label '" + s + "'");
  return Label::dummy(s);
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw std::invalid_argument("malformed rational '" + j.get<std::string>() + "'");
  return *q;
}

unsigned small_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<unsigned>::max())
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return static_cast<unsigned>(j.get<long long>());
}

}  // namespace

Scalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("scalar must be an object");
  Scalar s;
  if (j.contains("const")) s = Scalar(rational_from_json(j.at("const")));
  if (j.contains("unknowns")) {
    const auto& u = j.at("unknowns");
    if (!u.is_object()) throw std::invalid_argument("unknowns must be an object");
    for (const auto& [key, value] : u.items()) {
      auto k = parse_rational(key);
      if (!k || k->get_den() != 1 || *k < 1 || *k > kMaxUnknown || key.front() == '-' || key.front() == '+')
        throw std::invalid_argument("unknown index '" + key + "' outside 1.." + std::to_string(kMaxUnknown));
      s += Scalar::unknown(static_cast<int>(k->get_num().get_si()), rational_from_json(value));
    }
  }
  return s;
}

ojson scalar_to_json(const Scalar& s) {
  ojson out;
  out["const"] = to_string(s.constant());
  ojson u = ojson::object();
  for (const auto& [k, q] : s.unknowns()) u[std::to_string(k)] = to_string(q);
  out["unknowns"] = std::move(u);
  return out;
}

ojson term_to_json(const Term& t) {
  ojson cs = ojson::array();
  for (const auto& c : t.correlators) {
    ojson ins = ojson::array();
    for (const auto& i : c.insertions) ins.push_back({{"label", i.label.spelling()}, {"psi", i.psi}});
    cs.push_back({{"genus", c.genus}, {"insertions", std::move(ins)}});
  }
  return cs;
}

Term term_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("correlators must be an array");
  Term t;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("insertions") || !c.at("insertions").is_array())
      throw std::invalid_argument("correlator needs an insertions array");
    Correlator corr;
    corr.genus = c.contains("genus") ? small_from_json(c.at("genus"), "genus") : 0;
    for (const auto& i : c.at("insertions")) {
      if (!i.is_object() || !i.contains("label") || !i.at("label").is_string())
        throw std::invalid_argument("insertion needs a string label");
      unsigned psi = i.contains("psi") ? small_from_json(i.at("psi"), "psi") : 0;
      corr.insertions.push_back({label_from_spelling(i.at("label").get<std::string>()), psi});
    }
    t.correlators.push_back(std::move(corr));
  }
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plain-grammar parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::vector<ParsedSummand> summands() {
    std::vector<ParsedSummand> out;
    skip_space();
    if (lone_zero()) return out;

    Rational sign = 1;
    if (peek() == '+' || (peek() == '-' && !std::isdigit(static_cast<unsigned char>(peek(1))))) {
      if (peek() == '-') sign = -1;
      ++pos_;
      skip_space();
    }
    for (;;) {
      std::size_t start = pos_;
      auto [coef, term] = term_with_scalar();
      if (auto v = validate(term); !v.empty()) throw ValidationError(std::move(v));
      out.push_back({coef * sign, std::move(term), start});
      skip_space();
      if (at_end()) break;
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        fail("unexpected character", {"\"+\"", "\"-\"", "end of input"});
      ++pos_;
      skip_space();
    }
    return out;
  }

  Term bare_term() {
    skip_space();
    Term t = factors();
    skip_space();
    if (!at_end()) fail("unexpected trailing input", {"\"<\"", "end of input"});
    return t;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  void skip_space() {
    while (!at_end()) {
      char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool lone_zero() {
    if (peek() != '0') return false;
    std::size_t saved = pos_;
    ++pos_;
    skip_space();
    if (at_end()) return true;
    pos_ = saved;
    return false;
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < pos_ && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = message;
    if (!at_end()) {
      auto u = static_cast<unsigned char>(peek());
      msg += std::isprint(u) ? std::string(" '") + peek() + "'" : " (byte " + std::to_string(u) + ")";
    } else {
      msg += " at end of input";
    }
    throw ParseError(pos_, line, column, msg, std::move(expected));
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail("unexpected input", {std::string("\"") + ch + "\""});
    ++pos_;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a digit", {"integer"});
    return src_.substr(start, pos_ - start);
  }

  unsigned small_integer(const char* what) {
    std::size_t start = pos_;
    auto d = digits();
    unsigned long long v = 0;
    for (char ch : d) {
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v > std::numeric_limits<unsigned>::max()) {
        pos_ = start;
        fail(std::string(what) + " out of range");
      }
    }
    return static_cast<unsigned>(v);
  }

  Rational rational() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num(std::string(digits()), 10);
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = mpz_class(std::string(digits()), 10);
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  int unknown_index() {
    if (peek() != 'c') fail("expected an unknown", {"\"c\" integer"});
    ++pos_;
    std::size_t at = pos_;
    unsigned k = small_integer("unknown index");
    if (k < 1 || k > static_cast<unsigned>(kMaxUnknown)) {
      pos_ = at;
      fail("unknown index outside 1.." + std::to_string(kMaxUnknown));
    }
    return static_cast<int>(k);
  }

  Scalar atom() {
    skip_space();
    if (peek() == 'c') return Scalar::unknown(unknown_index());
    if (peek() != '-' && !std::isdigit(static_cast<unsigned char>(peek())))
      fail("unexpected input", {"rational", "unknown"});
    Rational q = rational();
    std::size_t saved = pos_;
    skip_space();
    if (peek() == '*') {
      ++pos_;
      skip_space();
      return Scalar::unknown(unknown_index(), q);
    }
    pos_ = saved;
    return Scalar(q);
  }

  Scalar linform() {
    skip_space();
    Rational sign = 1;
    if (peek() == '-' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      sign = -1;
      ++pos_;
    }
    Scalar s = atom() * sign;
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        s += atom();
      } else if (peek() == '-') {
        ++pos_;
        s -= atom();
      } else {
        return s;
      }
    }
  }

  Scalar scalar() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Scalar s = linform();
      expect(')');
      return s;
    }
    if (ch == 'c') return Scalar::unknown(unknown_index());
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) return Scalar(rational());
    fail("unexpected input", {"\"<\"", "rational", "unknown", "\"(\""});
  }

  std::pair<Scalar, Term> term_with_scalar() {
    skip_space();
    Scalar coef(1);
    if (peek() != '<') {
      coef = scalar();
      expect('*');
    }
    return {std::move(coef), factors()};
  }

  Term factors() {
    Term t;
    skip_space();
    if (peek() != '<') fail("unexpected input", {"\"<\""});
    while (peek() == '<') {
      t.correlators.push_back(factor());
      skip_space();
    }
    return t;
  }

  Correlator factor() {
    ++pos_;  // '<'
    Correlator c;
    for (;;) {
      while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',' || peek() == '#')) {
        if (peek() == '#')
          skip_space();
        else
          ++pos_;
      }
      if (peek() == '>') break;
      c.insertions.push_back(insertion());
    }
    if (c.insertions.empty()) fail("empty correlator", {"label"});
    ++pos_;  // '>'
    if (peek() == '_') {
      ++pos_;
      c.genus = small_integer("genus");
    }
    return c;
  }

  Insertion insertion() {
    if (!std::islower(static_cast<unsigned char>(peek()))) fail("unexpected input", {"label", "\">\""});
    std::size_t start = pos_;
    while (std::islower(static_cast<unsigned char>(peek())) || std::isdigit(static_cast<unsigned char>(peek())) ||
           peek() == '_')
      ++pos_;
    Insertion ins{detail::label_from_spelling(std::string(src_.substr(start, pos_ - start))), 0};
    if (peek() == '^') {
      ++pos_;
      ins.psi = small_integer("psi-power");
    }
    return ins;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedSummand> parse_summands(std::string_view src) { return Parser(src).summands(); }

Expression parse_expression(std::string_view src) {
  Expression e;
  for (const auto& s : parse_summands(src)) e.add(s.term, s.coefficient);
  return e;
}

Term parse_term(std::string_view src) { return Parser(src).bare_term(); }

Expression parse_expression_json(std::string_view src) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.byte, 1, ex.byte, ex.what());
  }
  auto schema_error = [](const std::string& what) { return ParseError(0, 1, 1, "JSON schema: " + what); };
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) throw schema_error("missing terms array");
  Expression e;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("correlators")) throw schema_error("term needs correlators");
    Term term;
    Scalar coef(1);
    try {
      term = detail::term_from_json(t.at("correlators"));
      if (t.contains("scalar")) coef = detail::scalar_from_json(t.at("scalar"));
    } catch (const std::invalid_argument& ex) {
      throw schema_error(ex.what());
    }
    if (auto v = validate(term); !v.empty()) throw ValidationError(std::move(v));
    e.add(term, coef);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Printers

namespace {

std::string latex_index(unsigned n) {
  auto s = std::to_string(n);
  return s.size() == 1 ? s : "{" + s + "}";
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

// One monomial of a linear form, without its sign.
std::string unsigned_piece(const Rational& abs_coef, int k, Format f) {
  std::string var = f == Format::latex ? "c_{" + std::to_string(k) + "}" : "c" + std::to_string(k);
  if (abs_coef == 1) return var;
  return f == Format::latex ? latex_rational(abs_coef) + " " + var : to_string(abs_coef) + "*" + var;
}

std::string linform(const Scalar& s, Format f) {
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& q, const std::string& body) {
    if (first)
      out += q < 0 ? "-" + body : body;
    else
      out += q < 0 ? " - " + body : " + " + body;
    first = false;
  };
  if (s.constant() != 0) {
    Rational a = magnitude(s.constant());
    emit(s.constant(), f == Format::latex ? latex_rational(a) : to_string(a));
  }
  for (const auto& [k, q] : s.unknowns()) emit(q, unsigned_piece(magnitude(q), k, f));
  return out;
}

std::string summand_prefix(const Scalar& s, bool first, Format f) {
  const char* mul = f == Format::latex ? " " : "*";
  if (s.is_rational()) {
    const Rational& q = s.constant();
    Rational a = magnitude(q);
    std::string body = a == 1 ? "" : (f == Format::latex ? latex_rational(a) : to_string(a)) + mul;
    if (first) {
      if (q == 1) return "";
      if (q == -1) return f == Format::latex ? "-" : "-1*";
      return (f == Format::latex ? latex_rational(q) : to_string(q)) + mul;
    }
    return (q < 0 ? " - " : " + ") + body;
  }
  return (first ? "" : " + ") + print_scalar(s, f) + mul;
}

std::string print_json(const std::vector<std::pair<Term, Scalar>>& summands) {
  detail::ojson terms = detail::ojson::array();
  for (const auto& [t, s] : summands)
    terms.push_back({{"scalar", detail::scalar_to_json(s)}, {"correlators", detail::term_to_json(t)}});
  detail::ojson out;
  out["terms"] = std::move(terms);
  return out.dump();
}

}  // namespace

std::string print_scalar(const Scalar& s, Format f) {
  if (f == Format::json) return detail::scalar_to_json(s).dump();
  if (s.is_rational()) return f == Format::latex ? latex_rational(s.constant()) : to_string(s.constant());
  if (s.is_pure_unknown()) return unsigned_piece(1, s.unknowns().begin()->first, f);
  return f == Format::latex ? "\\left(" + linform(s, f) + "\\right)" : "(" + linform(s, f) + ")";
}

std::string print_term(const Term& t, Format f) {
  if (f == Format::json) return detail::term_to_json(t).dump();
  std::string out;
  for (std::size_t k = 0; k < t.correlators.size(); ++k) {
    const auto& c = t.correlators[k];
    if (f == Format::latex) {
      if (k) out += ' ';
      out += "\\<";
      for (const auto& ins : c.insertions) {
        auto name = ins.label.spelling();
        out += " \\partial^" + (name.size() == 1 ? name : "{" + name + "}");
        if (ins.psi) out += "_" + latex_index(ins.psi);
      }
      out += " \\>";
      if (c.genus) out += "_" + latex_index(c.genus);
    } else {
      out += '<';
      for (std::size_t n = 0; n < c.insertions.size(); ++n) {
        if (n) out += ' ';
        out += c.insertions[n].label.spelling();
        if (c.insertions[n].psi) out += "^" + std::to_string(c.insertions[n].psi);
      }
      out += '>';
      if (c.genus) out += "_" + std::to_string(c.genus);
    }
  }
  return out;
}

std::string print_summands(const std::vector<std::pair<Term, Scalar>>& summands, Format f) {
  if (f == Format::json) return print_json(summands);
  if (summands.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, s] : summands) {
    out += summand_prefix(s, first, f) + print_term(t, f);
    first = false;
  }
  return out;
}

std::string print(const Expression& e, Format f) {
  std::vector<std::pair<Term, Scalar>> summands(e.terms().begin(), e.terms().end());
  return print_summands(summands, f);
}

}  // namespace gwis
