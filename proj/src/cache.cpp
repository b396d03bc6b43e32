#include "hgalg/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "hgalg/hypergraph.hpp"

namespace hgalg {

namespace fs = std::filesystem;

fs::path ResultCache::default_root(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv("HGALG_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hgalg";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hgalg";
  return fs::temp_directory_path() / "hgalg-cache";
}

std::string ResultCache::key(const std::string& canonical_input, const std::string& operation,
                             const std::string& flags) {
  return sha256_hex(operation + '\n' + flags + '\n' + canonical_input);
}

fs::path ResultCache::path_for(const std::string& key) const { return root_ / key.substr(0, 2) / key; }

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  const fs::path target = path_for(key);
  fs::create_directories(target.parent_path(), ec);
  if (ec) return;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << payload;
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace hgalg
