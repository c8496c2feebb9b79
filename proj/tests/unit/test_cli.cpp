#include <unistd.h>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jw/cli/cli.hpp"
#include "jw/freelie/lie.hpp"

using namespace jw;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("jw_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("witt csv") {
  const auto r = call({"witt", "--n", "2", "--k", "1..4", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "k=1,k=2,k=3,k=4\n2,1,2,3\n");
}

TEST_CASE("h1 json") {
  const auto r = call({"h1", "--group", "bp", "--n", "4", "--rep", "standard", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["free_rank"] == 2);
  CHECK(j["torsion"] == nlohmann::json::array({4}));
  for (const char* key : {"title", "columns", "rows", "provenance"}) CHECK(j.contains(key));
}

TEST_CASE("table8 rows") {
  const auto r = call({"table8", "--kmax", "7", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "k,alpha,c_alpha,r_alpha\n5,\"(3,2)\",2,0\n6,\"(4,2)\",2,0\n6,\"(3,3)\",3,0\n6,\"(2,2,2)\",15,1\n"
        "7,\"(5,2)\",3,0\n7,\"(4,3)\",5,0\n7,\"(3,2,2)\",30,0\n");
}

TEST_CASE("formats carry the same numbers") {
  const auto csv = call({"ranks", "--n", "3", "--k", "1..4", "--format", "csv"}).out;
  const auto json = nlohmann::json::parse(call({"ranks", "--n", "3", "--k", "1..4", "--format", "json"}).out);
  const auto text = call({"ranks", "--n", "3", "--k", "1..4"}).out;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t r = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(cells, cell, ',')) {
      CHECK(json["rows"][r][c].get<long>() == std::stol(cell));
      CHECK(text.find(cell) != std::string::npos);
      ++c;
    }
    ++r;
  }
  CHECK(r == 4);
}

TEST_CASE("deterministic output") {
  const auto a = call({"image", "--n", "3", "--k", "1..5", "--threads", "1", "--format", "json"});
  const auto b = call({"image", "--n", "3", "--k", "1..5", "--threads", "4", "--format", "json"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(call({"table7", "--n", "3"}).out == call({"table7", "--n", "3"}).out);
}

TEST_CASE("exit codes") {
  CHECK(call({}).status == 1);
  CHECK(call({"nope"}).status == 1);
  CHECK(call({"witt", "--n", "2"}).status == 1);
  CHECK(call({"witt", "--n", "2", "--k", "3..1"}).status == 1);
  CHECK(call({"trace", "--n", "3", "--k", "2", "--mode", "hat"}).status == 1);
  CHECK(call({"h1", "--group", "file", "--n", "3"}).status == 1);
  CHECK(call({"h2", "--n", "4"}).status == 0);
  CHECK(call({"egens", "--n", "3"}).status == 0);
  CHECK(call({"t0530", "--n", "3", "--k", "4"}).status == 0);
  CHECK(call({"--help"}).status == 0);
}

TEST_CASE("large integers become strings") {
  CHECK(cli::to_json(Integer(12)) == 12);
  const Integer big = Integer(1) << 60;
  CHECK(cli::to_json(big) == big.get_str());
}

TEST_CASE("file groups") {
  const auto dir = fresh_dir("group");
  std::filesystem::create_directories(dir);
  const auto path = dir / "z2.txt";
  std::ofstream(path) << "a b\na^2\na b a^-1 b^-1\n";
  const auto r = call({"abelianize", "--group", "file", "--file", path.string(), "--format", "json"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["torsion"] == nlohmann::json::array({2}));
  CHECK(call({"h1", "--group", "file", "--file", path.string(), "--rep", "trivial"}).status == 0);
  CHECK(call({"h1", "--group", "file", "--file", path.string(), "--rep", "standard"}).status == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output file") {
  const auto dir = fresh_dir("out");
  std::filesystem::create_directories(dir);
  const auto path = dir / "w.csv";
  CHECK(call({"witt", "--n", "3", "--k", "2", "--format", "csv", "--out", path.string()}).status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "k=2\n3\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("hall basis cache") {
  const auto dir = fresh_dir("cache");
  CHECK(cli::cache_roundtrip(dir, 3, 6));
  const auto loaded = cli::load_hall_cache(dir, 3, 6);
  REQUIRE(loaded);
  CHECK(loaded->size() == 116);
  CHECK(*loaded == *freelie::hall_words(3, 6));

  // A stale version is ignored and rewritten.
  std::ofstream(cli::cache_path(dir, 3, 4)) << R"({"format_version":0,"n":3,"k":4,"words":[[1]]})";
  CHECK_FALSE(cli::load_hall_cache(dir, 3, 4));
  CHECK(cli::cached_hall_words(dir, 3, 4)->size() == 18);
  CHECK(cli::load_hall_cache(dir, 3, 4));

  // Garbage content is regenerated too.
  std::ofstream(cli::cache_path(dir, 3, 3)) << R"({"format_version":1,"n":3,"k":3,"words":[[1,2,3]]})";
  CHECK(cli::cached_hall_words(dir, 3, 3)->size() == 8);
  CHECK(cli::load_hall_cache(dir, 3, 3)->size() == 8);

  const auto empty = fresh_dir("cache_empty");
  CHECK(cli::cached_hall_words(empty, 2, 5)->size() == 6);
  CHECK(std::filesystem::exists(cli::cache_path(empty, 2, 5)));
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(empty);
}
