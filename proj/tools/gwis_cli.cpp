// Command-line front end. Talks to the engine only through the C API.

#include "gwis/gwis.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadData = 3;
constexpr int kExitInternal = 4;

int exit_code(gwis_status st) {
  switch (st) {
    case GWIS_OK:
      return 0;
    case GWIS_E_VERIFY:
    case GWIS_E_NO_SOLUTION:
      return kExitVerifyFailed;
    case GWIS_E_INPUT:
    case GWIS_E_ARGUMENT:
      return kExitBadInput;
    case GWIS_E_DATA:
      return kExitBadData;
    case GWIS_E_INTERNAL:
      break;
  }
  return kExitInternal;
}

struct Context {
  gwis_context* ptr = nullptr;
  ~Context() { gwis_context_destroy(ptr); }
};

struct Expr {
  gwis_expr* ptr = nullptr;
  ~Expr() { gwis_expr_destroy(ptr); }
};

struct Text {
  char* ptr = nullptr;
  ~Text() { gwis_string_free(ptr); }
};

// "-" reads stdin; an existing file is read; anything else is the input itself.
std::optional<std::string> resolve_input(const std::string& arg) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

void put(const char* text) {
  std::string s(text);
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gwis: exact algebra of correlator-bracket expressions and the codimension-3 relation system"};
  app.require_subcommand(1, 1);

  std::string format_name;
  std::string data_dir;
  std::string input;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "latex", "json"}));
  app.add_option("--data-dir", data_dir, "Directory whose data files override the embedded ones");

  auto* canon = app.add_subcommand("canon", "Print the canonical form of an expression");
  auto* parse = app.add_subcommand("parse", "Parse an expression and print it (JSON by default)");
  for (auto* sub : {canon, parse}) {
    sub->add_option("--input,input", input, "Expression text, a file path, or - for stdin")->required();
  }
  auto* solve = app.add_subcommand("solve", "Solve the embedded system with c1 = -1");
  auto* rank = app.add_subcommand("rank", "Rank and kernel dimension of the embedded system");
  auto* verify = app.add_subcommand("verify", "Run the full verification; exit 0 iff it passes");
  auto* emit = app.add_subcommand("emit", "Print the relation rebuilt from the solved vector");
  (void)solve;
  (void)rank;
  (void)verify;
  (void)emit;

  // Global options are accepted after the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  if (format_name.empty()) format_name = name == "parse" ? "json" : "plain";
  gwis_format format = format_name == "json" ? GWIS_FORMAT_JSON
                       : format_name == "latex" ? GWIS_FORMAT_LATEX
                                                : GWIS_FORMAT_PLAIN;

  Context ctx;
  if (gwis_status st = gwis_context_create(data_dir.empty() ? nullptr : data_dir.c_str(), &ctx.ptr); st != GWIS_OK) {
    std::cerr << "gwis: cannot open data directory '" << data_dir << "'\n";
    return exit_code(st);
  }

  Text out;
  gwis_status st = GWIS_OK;
  if (name == "canon" || name == "parse") {
    auto text = resolve_input(input);
    if (!text) {
      std::cerr << "gwis: cannot read " << input << '\n';
      return kExitBadInput;
    }
    Expr e;
    st = gwis_expr_parse(ctx.ptr, text->c_str(), &e.ptr);
    if (st == GWIS_OK) st = gwis_expr_print(ctx.ptr, e.ptr, format, &out.ptr);
  } else if (name == "solve") {
    st = gwis_solve(ctx.ptr, format, &out.ptr);
  } else if (name == "rank") {
    st = gwis_rank(ctx.ptr, format, &out.ptr);
  } else if (name == "verify") {
    st = gwis_verify(ctx.ptr, format, &out.ptr);
  } else if (name == "emit") {
    st = gwis_emit(ctx.ptr, format, &out.ptr);
  }

  if (out.ptr) put(out.ptr);
  if (st != GWIS_OK) std::cerr << "gwis " << name << ": " << gwis_last_error(ctx.ptr) << '\n';
  return exit_code(st);
}
