#ifndef HGALG_CACHE_HPP
#define HGALG_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace hgalg {

/// Content-addressed store of command outputs. Each entry lives in
/// <root>/<first two hex digits>/<key>, where the key is the SHA-256 of the
/// input's canonical form, the operation name and its flags.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

  /// Explicit directory if given, else $HGALG_CACHE_DIR, else
  /// $XDG_CACHE_HOME/hgalg, else $HOME/.cache/hgalg.
  static std::filesystem::path default_root(const std::optional<std::string>& explicit_dir = std::nullopt);

  static std::string key(const std::string& canonical_input, const std::string& operation, const std::string& flags);

  const std::filesystem::path& root() const { return root_; }
  std::optional<std::string> get(const std::string& key) const;
  /// Writes through a temporary file and a rename, so readers never see a
  /// partial entry. Failures to write are ignored.
  void put(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path root_;
};

}  // namespace hgalg

#endif  // HGALG_CACHE_HPP
