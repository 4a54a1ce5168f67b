#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qvcz/errors.hpp"
#include "qvcz/io.hpp"

using namespace qvcz;

namespace {

Table sample_table() {
  Table t;
  t.comments = {"tool demo", "n=1.5"};
  t.columns = {"x", "label", "y"};
  t.rows.push_back({Cell{0.1}, Cell{std::string("a")}, Cell{1.0 / 3.0}});
  t.rows.push_back({Cell{0.2}, Cell{std::string("b")}, Cell{2.0}});
  return t;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {1.0 / 3.0, 2.0, 1e-300, 123456.789, -0.0424492346407}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("csv layout") {
  const std::string csv = to_csv(sample_table());
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "# tool demo");
  std::getline(is, line);
  CHECK(line == "# n=1.5");
  std::getline(is, line);
  CHECK(line == "x,label,y");
  std::getline(is, line);
  CHECK(line == "0.10000000000000001,a,0.33333333333333331");
}

TEST_CASE("json mirrors rows as an array of objects") {
  const std::string json = to_json(sample_table());
  CHECK(json.find("\"x\": 0.1") != std::string::npos);
  CHECK(json.find("\"label\": \"a\"") != std::string::npos);
  CHECK(json.front() == '[');
  // comments are CSV-only
  CHECK(json.find("demo") == std::string::npos);
}

TEST_CASE("atomic write") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qvcz_io_test";
  fs::create_directories(dir);
  const fs::path p = dir / "out.csv";
  atomic_write(p.string(), "hello\n");
  std::ifstream f(p);
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "hello\n");
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));
  fs::remove_all(dir);

  CHECK_THROWS_AS(atomic_write("/nonexistent_dir_qvcz/x.csv", "y"), IoError);
}
