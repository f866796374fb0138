#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homodyn/report.hpp"
#include "homodyn/sparse_orbits.hpp"

using namespace homodyn;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Minimal RFC 4180 field splitter used as an independent reader.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out{""};
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("csv layout") {
  ExperimentReport empty("e", {"a", "b"});
  auto text = to_csv(empty, 7);
  CHECK(text == "# homodyn v" HOMODYN_VERSION " seed=7\na,b\n");

  ExperimentReport r("r", {"name", "x", "n"});
  r.add_row({std::string("first"), 1.0 / 3, std::int64_t{5}});
  r.add_row({std::string("with,comma"), 2e-20, std::int64_t{-1}});
  r.add_row({std::string("say \"hi\""), 123456789.123456789, std::int64_t{0}});
  auto csv = to_csv(r, 42);
  auto ls = lines(csv);
  REQUIRE(ls.size() == 5);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(ls[2] == "first,0.333333333333,5");
  CHECK(split_csv(ls[3]) == std::vector<std::string>{"with,comma", "2e-20", "-1"});
  CHECK(split_csv(ls[4]) == std::vector<std::string>{"say \"hi\"", "123456789.123", "0"});
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(split_csv(ls[i]).size() == 3);
}

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 90) == "0.0111111111111");
  CHECK(format_number(1e300) == "1e+300");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(std::stod(format_number(3.14159265358979)) == doctest::Approx(3.14159265358979).epsilon(1e-12));
}

TEST_CASE("report accessors") {
  ExperimentReport r("r", {"k", "v"});
  CHECK_THROWS_AS(r.add_row({1.0}), InvalidArgument);
  r.add_row({std::string("x"), 2.5});
  CHECK(r.number(0, "v") == 2.5);
  CHECK_THROWS_AS(r.number(0, "k"), InvalidArgument);
  CHECK_THROWS_AS(r.column_index("missing"), InvalidArgument);
  r.set_param("a", 1.5);
  r.set_param("a", std::string("two"));
  CHECK(r.param("a") == "two");
  CHECK_FALSE(r.param("b").has_value());
  r.add_note("one");
  r.add_note("two");
  CHECK(r.notes() == "one\ntwo");
}

TEST_CASE("csv files") {
  auto dir = std::filesystem::temp_directory_path() / "homodyn_report_test";
  std::filesystem::create_directories(dir);
  ExperimentReport r("r", {"x"});
  r.add_row({1.0});
  auto path = (dir / "out.csv").string();
  emit_csv(r, path, 3);
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == to_csv(r, 3));
  CHECK_THROWS_AS(emit_csv(r, (dir / "missing" / "x.csv").string(), 3), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg") {
  auto periodic = sample_sparse(reduce(GroupElement::identity()), 0.0, 100);
  auto svg = to_svg(periodic);
  std::size_t markers = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++markers;
  CHECK(markers == 1);
  CHECK(svg.find("viewBox=\"-0.6 -4 1.2 3.2\"") != std::string::npos);

  std::vector<UpperHalfPoint> high{{0.1, 50.0}};
  auto clipped = to_svg(high);
  CHECK(clipped.find("cy=\"-4.000000\"") != std::string::npos);
}
