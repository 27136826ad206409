#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace gwis {

/// Where the catalog files come from: the copies compiled into the library,
/// optionally overridden file-by-file from a directory.
class DataSource {
 public:
  DataSource() = default;
  /// Throws DataIntegrityError if `dir` is not an existing directory.
  explicit DataSource(std::filesystem::path dir);

  static DataSource embedded() { return {}; }

  /// Contents of `name` (e.g. "equations.json"). Files absent from the
  /// override directory fall back to the embedded copy.
  std::string read(std::string_view name) const;

  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

 private:
  std::optional<std::filesystem::path> dir_;
};

/// The embedded copy of `name`, or nullopt for an unknown file name.
std::optional<std::string_view> embedded_file(std::string_view name);

}  // namespace gwis
