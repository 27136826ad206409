#include "gwis/data.hpp"

#include "gwis/error.hpp"

#include <fstream>
#include <sstream>

namespace gwis {

namespace embedded {
extern const std::string_view strata_gwis;
extern const std::string_view theorem_gwis;
extern const std::string_view solution_table_json;
extern const std::string_view equations_json;
}  // namespace embedded

std::optional<std::string_view> embedded_file(std::string_view name) {
  if (name == "strata.gwis") return embedded::strata_gwis;
  if (name == "theorem.gwis") return embedded::theorem_gwis;
  if (name == "solution_table.json") return embedded::solution_table_json;
  if (name == "equations.json") return embedded::equations_json;
  return std::nullopt;
}

DataSource::DataSource(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  if (!std::filesystem::is_directory(*dir_, ec))
    throw DataIntegrityError("data directory '" + dir_->string() + "' does not exist");
}

std::string DataSource::read(std::string_view name) const {
  if (dir_) {
    auto path = *dir_ / std::string(name);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw DataIntegrityError("cannot read " + path.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
  }
  auto text = embedded_file(name);
  if (!text) throw DataIntegrityError("no data file named '" + std::string(name) + "'");
  return std::string(*text);
}

}  // namespace gwis
