#include "gwis/gwis.h"

#include "gwis/error.hpp"
#include "gwis/format.hpp"
#include "gwis/linsys.hpp"
#include "gwis/strata.hpp"
#include "json_util.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>

struct gwis_context {
  gwis::DataSource source;
  std::optional<gwis::Catalog> catalog;
  std::optional<std::vector<gwis::ConstraintEquation>> equations;
  std::string last_error;

  const gwis::Catalog& cat() {
    if (!catalog) catalog = gwis::Catalog::load(source);
    return *catalog;
  }
  const std::vector<gwis::ConstraintEquation>& eqs() {
    if (!equations) equations = gwis::load_equations(source);
    return *equations;
  }
};

struct gwis_expr {
  gwis::Expression value;
};

namespace {

using namespace gwis;

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<Format> to_format(gwis_format f) {
  switch (f) {
    case GWIS_FORMAT_PLAIN:
      return Format::plain;
    case GWIS_FORMAT_LATEX:
      return Format::latex;
    case GWIS_FORMAT_JSON:
      return Format::json;
  }
  return std::nullopt;
}

gwis_status fail(gwis_context* ctx, gwis_status st, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return st;
}

// Runs `body` translating exceptions into status codes.
template <class F>
gwis_status guarded(gwis_context* ctx, F&& body) {
  if (!ctx) return GWIS_E_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const ParseError& ex) {
    return fail(ctx, GWIS_E_INPUT, ex.what());
  } catch (const ValidationError& ex) {
    return fail(ctx, GWIS_E_INPUT, ex.what());
  } catch (const DataIntegrityError& ex) {
    return fail(ctx, GWIS_E_DATA, ex.what());
  } catch (const SolveError& ex) {
    return fail(ctx, GWIS_E_NO_SOLUTION, ex.what());
  } catch (const std::out_of_range& ex) {
    return fail(ctx, GWIS_E_ARGUMENT, ex.what());
  } catch (const Error& ex) {
    return fail(ctx, GWIS_E_INPUT, ex.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, GWIS_E_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(ctx, GWIS_E_INTERNAL, ex.what());
  }
}

gwis_status emit_string(gwis_context* ctx, const std::string& s, char** out) {
  *out = dup_string(s);
  return *out ? GWIS_OK : fail(ctx, GWIS_E_INTERNAL, "out of memory");
}

gwis_status emit_expr(Expression e, gwis_expr** out) {
  *out = new gwis_expr{std::move(e)};
  return GWIS_OK;
}

Rational rational_arg(const char* s) {
  auto q = s ? parse_rational(s) : std::nullopt;
  if (!q) throw ParseError(0, 1, 1, std::string("malformed rational '") + (s ? s : "(null)") + "'");
  return *q;
}

std::string render_assignment(const Assignment& a, Format f) {
  if (f == Format::json) {
    detail::ojson j = detail::ojson::object();
    for (const auto& [k, q] : a) j["c" + std::to_string(k)] = to_string(q);
    return j.dump();
  }
  std::string out;
  for (const auto& [k, q] : a) {
    if (f == Format::latex)
      out += "c_{" + std::to_string(k) + "} = " + print_scalar(Scalar(q), Format::latex) + "\n";
    else
      out += "c" + std::to_string(k) + " = " + to_string(q) + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* gwis_version(void) { return "1.0.0"; }

gwis_status gwis_context_create(const char* data_dir, gwis_context** out) {
  if (!out) return GWIS_E_ARGUMENT;
  *out = nullptr;
  try {
    auto ctx = std::make_unique<gwis_context>();
    if (data_dir) ctx->source = DataSource(data_dir);
    *out = ctx.release();
    return GWIS_OK;
  } catch (const DataIntegrityError&) {
    return GWIS_E_DATA;
  } catch (...) {
    return GWIS_E_INTERNAL;
  }
}

void gwis_context_destroy(gwis_context* ctx) { delete ctx; }

const char* gwis_last_error(const gwis_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void gwis_string_free(char* s) { std::free(s); }

gwis_status gwis_expr_parse(gwis_context* ctx, const char* src, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!src || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(parse_expression(src), out);
  });
}

gwis_status gwis_expr_parse_json(gwis_context* ctx, const char* src, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!src || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(parse_expression_json(src), out);
  });
}

void gwis_expr_destroy(gwis_expr* e) { delete e; }

gwis_status gwis_expr_print(gwis_context* ctx, const gwis_expr* e, gwis_format format, char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!e || !out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    return emit_string(ctx, print(e->value, *f), out);
  });
}

gwis_status gwis_expr_equal(gwis_context* ctx, const gwis_expr* a, const gwis_expr* b, int* out) {
  return guarded(ctx, [&] {
    if (!a || !b || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    *out = a->value == b->value ? 1 : 0;
    return GWIS_OK;
  });
}

gwis_status gwis_expr_term_count(gwis_context* ctx, const gwis_expr* e, unsigned long* out) {
  return guarded(ctx, [&] {
    if (!e || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    *out = static_cast<unsigned long>(e->value.size());
    return GWIS_OK;
  });
}

gwis_status gwis_expr_symmetrize_ij(gwis_context* ctx, const gwis_expr* e, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!e || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(symmetrize_ij(e->value), out);
  });
}

gwis_status gwis_expr_combine(gwis_context* ctx, const char* a, const gwis_expr* e1, const char* b,
                              const gwis_expr* e2, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!e1 || !e2 || !out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(combine(Scalar(rational_arg(a)), e1->value, Scalar(rational_arg(b)), e2->value), out);
  });
}

gwis_status gwis_expr_coefficient(gwis_context* ctx, const gwis_expr* e, const gwis_expr* term, gwis_format format,
                                  char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!e || !term || !out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    if (term->value.size() != 1) return fail(ctx, GWIS_E_ARGUMENT, "term argument must hold exactly one term");
    return emit_string(ctx, print_scalar(coefficient_of(e->value, term->value.terms().begin()->first), *f), out);
  });
}

gwis_status gwis_basis(gwis_context* ctx, int k, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(Expression::of(ctx->cat().basis(k)), out);
  });
}

gwis_status gwis_generic_combination(gwis_context* ctx, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(ctx->cat().generic_E(), out);
  });
}

gwis_status gwis_theorem_rhs(gwis_context* ctx, gwis_expr** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, GWIS_E_ARGUMENT, "null argument");
    return emit_expr(ctx->cat().theorem_rhs(), out);
  });
}

gwis_status gwis_solve(gwis_context* ctx, gwis_format format, char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    return emit_string(ctx, render_assignment(solve_normalized(assemble_matrix(ctx->eqs())), *f), out);
  });
}

gwis_status gwis_rank(gwis_context* ctx, gwis_format format, char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    const auto m = assemble_matrix(ctx->eqs());
    const auto g = rank_and_kernel(m);
    const auto b = rank_and_kernel_fraction_free(m);
    std::string text;
    if (*f == Format::json) {
      detail::ojson j;
      j["equations"] = m.rows();
      j["unknowns"] = m.cols();
      j["rank"] = g.rank;
      j["kernel_dimension"] = g.kernel_dimension();
      j["rank_fraction_free"] = b.rank;
      j["kernel_dimension_fraction_free"] = b.kernel_dimension();
      j["paths_agree"] = g.rank == b.rank && g.kernel == b.kernel;
      text = j.dump(2);
    } else {
      text = "equations: " + std::to_string(m.rows()) + "\nunknowns: " + std::to_string(m.cols()) +
             "\nrank: " + std::to_string(g.rank) + "\nkernel dimension: " + std::to_string(g.kernel_dimension()) +
             "\nrank (fraction-free): " + std::to_string(b.rank) +
             "\npaths agree: " + (g.rank == b.rank && g.kernel == b.kernel ? "yes" : "no") + "\n";
    }
    return emit_string(ctx, text, out);
  });
}

gwis_status gwis_verify(gwis_context* ctx, gwis_format format, char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    const auto rep = verify(ctx->source);
    gwis_status st = emit_string(ctx, *f == Format::json ? report_to_json(rep) : report_to_text(rep), out);
    if (st != GWIS_OK) return st;
    return rep.passed ? GWIS_OK : fail(ctx, GWIS_E_VERIFY, "verification failed");
  });
}

gwis_status gwis_emit(gwis_context* ctx, gwis_format format, char** out) {
  return guarded(ctx, [&] {
    auto f = to_format(format);
    if (!out || !f) return fail(ctx, GWIS_E_ARGUMENT, "null argument or bad format");
    const auto& cat = ctx->cat();
    const auto solution = solve_normalized(assemble_matrix(ctx->eqs()));

    // E = 0 with c1 = -1 rearranges to (1) = sum_{k>=2} c_k (k).
    std::vector<std::pair<Term, Scalar>> rhs;
    std::vector<int> flips;
    for (int k = 2; k <= kBasisSize; ++k) {
      const Rational& c = solution.at(k);
      const Rational& printed = cat.theorem_coefficients().at(k);
      if (c != 0 && printed != 0 && (c < 0) != (printed < 0)) flips.push_back(k);
      if (c != 0) rhs.emplace_back(cat.basis(k), Scalar(c));
    }
    std::string text;
    if (*f == Format::json) {
      detail::ojson j;
      j["lhs"] = nlohmann::ordered_json::parse(print_summands({{cat.basis(1), Scalar(1)}}, Format::json));
      j["rhs"] = nlohmann::ordered_json::parse(print_summands(rhs, Format::json));
      j["sign_flips_vs_printed"] = flips;
      text = j.dump(2);
    } else {
      std::string flip_list;
      for (int k : flips) flip_list += (flip_list.empty() ? "" : ", ") + std::to_string(k);
      if (flip_list.empty()) flip_list = "none";
      text = print_term(cat.basis(1), *f) + " = " + print_summands(rhs, *f) + "\n" +
             (*f == Format::latex ? "% " : "# ") + "coefficients whose sign differs from the printed relation: " +
             flip_list + "\n";
    }
    return emit_string(ctx, text, out);
  });
}

}  // extern "C"
