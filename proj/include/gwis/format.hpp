#pragma once

#include "gwis/expression.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwis {

enum class Format { plain, latex, json };

/// "plain" | "latex" | "json"; throws Error on anything else.
Format parse_format(std::string_view name);

/// One summand as it appears in the source, before like terms are merged.
struct ParsedSummand {
  Scalar coefficient;
  Term term;          // as written (not canonicalized)
  std::size_t offset;  // byte offset of the summand in the source
};

/// Parses the plain grammar:
///
///   expression := term { ("+"|"-") term } ;
///   term       := [ scalar "*" ] factor { factor } ;
///   scalar     := rational | unknown | "(" linform ")" ;
///   linform    := [ "-" ] atom { ("+"|"-") atom } ;
///   atom       := rational | [ rational "*" ] unknown ;
///   rational   := [ "-" ] integer [ "/" integer ] ;
///   unknown    := "c" integer ;
///   factor     := "<" insertion { insertion } ">" [ "_" integer ] ;
///   insertion  := label [ "^" integer ] ;
///   label      := "x" | "i" | "j" | dummy-identifier ;
///
/// A lone "0" is the empty expression. `#` starts a comment running to the
/// end of the line; commas between insertions are ignored. Each summand is
/// validated; violations raise ValidationError, syntax problems ParseError.
Expression parse_expression(std::string_view src);

/// Same grammar, but returns the summands in source order without merging
/// or dropping zero coefficients.
std::vector<ParsedSummand> parse_summands(std::string_view src);

/// A single product of correlators with no coefficient; not canonicalized.
Term parse_term(std::string_view src);

/// Expression from the JSON interchange form (see print()).
Expression parse_expression_json(std::string_view src);

/// Renders an expression. Plain output re-parses to the same expression.
/// JSON schema:
///   {"terms": [{"scalar": {"const": "p/q", "unknowns": {"k": "p/q"}},
///               "correlators": [{"genus": g, "insertions": [{"label": "...", "psi": n}]}]}]}
std::string print(const Expression& e, Format format);

/// Like print() but keeps the given order of summands (used for relations
/// printed in basis order).
std::string print_summands(const std::vector<std::pair<Term, Scalar>>& summands, Format format);

std::string print_term(const Term& t, Format format);
std::string print_scalar(const Scalar& s, Format format);

}  // namespace gwis
