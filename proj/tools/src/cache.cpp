#include <fstream>
#include <stdexcept>

#include "jw/cli/cli.hpp"
#include "jw/freelie/lie.hpp"

namespace jw::cli {

using nlohmann::json;

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int k) {
  return dir / ("hall_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

void save_hall_cache(const std::filesystem::path& dir, int n, int k, const std::vector<freelie::Word>& words) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir.string() + ": " + ec.message());
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["n"] = n;
  doc["k"] = k;
  json list = json::array();
  for (const auto& w : words) list.push_back(freelie::letters(w));
  doc["words"] = std::move(list);
  const auto path = cache_path(dir, n, k);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot move cache file into place at " + path.string() + ": " + ec.message());
}

std::optional<std::vector<freelie::Word>> load_hall_cache(const std::filesystem::path& dir, int n, int k) {
  const auto path = cache_path(dir, n, k);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("format_version", -1) != kCacheFormatVersion) return std::nullopt;
  if (doc.value("n", -1) != n || doc.value("k", -1) != k) return std::nullopt;
  std::vector<freelie::Word> words;
  try {
    for (const auto& w : doc.at("words")) words.push_back(freelie::make_word(w.get<std::vector<int>>()));
  } catch (const json::exception&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return words;
}

std::shared_ptr<const std::vector<freelie::Word>> cached_hall_words(const std::filesystem::path& dir, int n, int k) {
  if (auto words = load_hall_cache(dir, n, k)) {
    try {
      freelie::install_hall_basis(n, k, std::move(*words));
      return freelie::hall_words(n, k);
    } catch (const std::invalid_argument&) {
      // Corrupt or foreign content: fall through and regenerate.
    }
  }
  auto words = freelie::hall_words(n, k);
  save_hall_cache(dir, n, k, *words);
  return words;
}

bool cache_roundtrip(const std::filesystem::path& dir, int n, int k) {
  const auto words = freelie::hall_words(n, k);
  save_hall_cache(dir, n, k, *words);
  const auto loaded = load_hall_cache(dir, n, k);
  return loaded && *loaded == *words;
}

}  // namespace jw::cli
