#include "rsbf/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <thread>

#include <unistd.h>

namespace rsbf::cache {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "rsbf-cache 1";
constexpr std::string_view kSuffix = ".entry";

std::string env(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string{};
}

}  // namespace

fs::path ResultCache::resolve_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (auto v = env("RSBF_CACHE_DIR"); !v.empty()) return v;
  if (auto v = env("XDG_CACHE_HOME"); !v.empty()) return fs::path(v) / "rsbf";
  if (auto v = env("HOME"); !v.empty()) return fs::path(v) / ".cache" / "rsbf";
  return fs::temp_directory_path() / "rsbf-cache";
}

fs::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (fnv1a_hex(key) + std::string(kSuffix));
}

std::optional<CachedResult> ResultCache::load(const std::string& key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  const std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto split = raw.find("\n\n");
  if (split == std::string::npos) return std::nullopt;

  std::istringstream header(raw.substr(0, split));
  std::string line;
  if (!std::getline(header, line) || line != kMagic) return std::nullopt;
  std::string stored_key;
  std::string checksum;
  long long length = -1;
  int exit_code = -1;
  while (std::getline(header, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos) return std::nullopt;
    const std::string name = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    try {
      if (name == "key") stored_key = value;
      else if (name == "exit") exit_code = std::stoi(value);
      else if (name == "length") length = std::stoll(value);
      else if (name == "checksum") checksum = value;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::string payload = raw.substr(split + 2);
  if (stored_key != key || exit_code < 0 || length != static_cast<long long>(payload.size()) ||
      checksum != fnv1a_hex(payload)) {
    return std::nullopt;
  }
  return CachedResult{exit_code, std::move(payload)};
}

void ResultCache::store(const std::string& key, const CachedResult& value) const {
  // Keys are single-line by construction; refuse anything else rather than
  // write an entry that could never validate.
  if (key.find('\n') != std::string::npos) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  static std::atomic<unsigned> counter{0};
  const fs::path target = entry_path(key);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                       "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << kMagic << '\n'
        << "key " << key << '\n'
        << "exit " << value.exit_code << '\n'
        << "length " << value.output.size() << '\n'
        << "checksum " << fnv1a_hex(value.output) << "\n\n"
        << value.output;
    if (!out.flush()) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

std::size_t ResultCache::clear() const {
  std::error_code ec;
  std::size_t removed = 0;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    const auto name = entry.path().filename().string();
    const bool is_entry = name.size() > kSuffix.size() &&
                          name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0;
    const bool is_temp = name.find(".entry.tmp.") != std::string::npos;
    if ((is_entry || is_temp) && fs::remove(entry.path(), ec)) {
      if (is_entry) ++removed;
    }
  }
  return removed;
}

}  // namespace rsbf::cache
