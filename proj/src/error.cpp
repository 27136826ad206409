#include "gwis/error.hpp"

namespace gwis {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

std::string parse_message(std::size_t line, std::size_t column, const std::string& message,
                          const std::vector<std::string>& expected) {
  std::string out = "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += " (expected " + join(expected, ", ") + ")";
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::size_t line, std::size_t column, const std::string& message,
                       std::vector<std::string> expected)
    : Error(parse_message(line, column, message, expected)),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("invalid term: " + join(violations, "; ")), violations_(std::move(violations)) {}

MissingUnknownError::MissingUnknownError(int index)
    : Error("no value assigned to unknown c" + std::to_string(index)), index_(index) {}

}  // namespace gwis
