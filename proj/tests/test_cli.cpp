#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

#include "homodyn/diophantine.hpp"
#include "runner.hpp"

using namespace homodyn;
using namespace homodyn::cli;

TEST_CASE("parse_base") {
  CHECK(parse_base("golden") == slope_base(std::numbers::phi));
  CHECK(parse_base("sqrt2") == slope_base(std::numbers::sqrt2));
  CHECK(parse_base("identity") == GroupElement::identity());
  CHECK(parse_base("liouville(3)") == slope_base(static_cast<double>(planted_number(3, 40).x)));
  CHECK(parse_base("2,1,1,1") == GroupElement(2, 1, 1, 1));
  CHECK_THROWS_AS(parse_base("bronze"), InvalidArgument);
  CHECK_THROWS_AS(parse_base("1,2,3"), InvalidArgument);
  CHECK_THROWS_AS(parse_base("1,0,0,-1"), Error);
}

TEST_CASE("parse_function") {
  CHECK(parse_function("height_band(2)").name() == "height_band(2)");
  CHECK(parse_function("constant(3)").haar_mean == 3.0);
  CHECK(parse_function("angle_weight").kind == TestKind::angle_weight);
  auto d = parse_function("disc(0,2,0.2)");
  CHECK(d.kind == TestKind::hyperbolic_disc);
  CHECK(d.radius == 0.2);
  auto c = parse_function("centered(height_band(2))");
  CHECK(c.haar_mean == 0.0);
  CHECK(c.shift == doctest::Approx(3 / (2 * std::numbers::pi)));
  CHECK(parse_suite("default").size() == 4);
  CHECK(parse_suite("height_band(2);angle_weight").size() == 2);
  CHECK_THROWS_AS(parse_function("sine(1)"), InvalidArgument);
  CHECK_THROWS_AS(parse_function("height_band(x)"), InvalidArgument);
}

TEST_CASE("read_config") {
  auto dir = std::filesystem::temp_directory_path() / "homodyn_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "run.cfg").string();
  {
    std::ofstream f(path);
    f << "# a comment\nexperiment = dim\nkappa = 2   # trailing\n\nschedule = 1.5,3000\n";
  }
  std::string experiment;
  auto tokens = read_config(path, experiment);
  CHECK(experiment == "dim");
  CHECK(tokens == std::vector<std::string>{"--kappa=2", "--schedule=1.5,3000"});
  {
    std::ofstream f(path);
    f << "no equals sign here\n";
  }
  CHECK_THROWS_AS(read_config(path, experiment), InvalidArgument);
  CHECK_THROWS_AS(read_config((dir / "absent.cfg").string(), experiment), Error);
  std::filesystem::remove_all(dir);
}
