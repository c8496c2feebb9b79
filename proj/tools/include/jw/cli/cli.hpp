#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "jw/exactlin/number.hpp"
#include "jw/freelie/word.hpp"

namespace jw::cli {

using Cell = std::variant<Integer, std::string>;

struct TableDocument {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string provenance;
  /// Extra top-level JSON members (e.g. free_rank/torsion for group results).
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

enum class Format { text, csv, json };
Format parse_format(const std::string& text);
std::string render(const TableDocument& doc, Format format);
/// Integers beyond 53 bits become strings.
nlohmann::ordered_json to_json(const Integer& value);

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on usage errors and 2 on verification mismatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hall basis cache: <dir>/hall_n{n}_k{k}.json
inline constexpr int kCacheFormatVersion = 1;
std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int k);
/// Throws std::runtime_error with the path on I/O failure.
void save_hall_cache(const std::filesystem::path& dir, int n, int k, const std::vector<freelie::Word>& words);
/// nullopt when the file is missing, unreadable as a cache or of another version.
std::optional<std::vector<freelie::Word>> load_hall_cache(const std::filesystem::path& dir, int n, int k);
/// Loads (and installs) a cached basis, or builds one and writes it.
std::shared_ptr<const std::vector<freelie::Word>> cached_hall_words(const std::filesystem::path& dir, int n, int k);
/// Save then load; true iff the reloaded list equals hall_words(n, k).
bool cache_roundtrip(const std::filesystem::path& dir, int n, int k);

}  // namespace jw::cli
