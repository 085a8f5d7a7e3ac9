#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "phm/mapspec.hpp"

using phm::testing::run_cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/phm_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("classify: EXAMPLE1 margins and max orders") {
  const auto res = run_cli("classify --builtin EXAMPLE1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("HC margin 0") != std::string::npos);
  CHECK(res.output.find("max starlike order 0.2857143") != std::string::npos);
  CHECK(res.output.find("max convex order") != std::string::npos);
}

TEST_CASE("classify: identity has maximal margins") {
  const auto res = run_cli("classify --builtin IDENTITY");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("HS margin 1") != std::string::npos);
  CHECK(res.output.find("max starlike order 1") != std::string::npos);
}

TEST_CASE("classify: non-normalized map exits with code 3") {
  const auto path = write_temp("b11.json",
                               R"({"p": 1, "layers": [{"h": [[1,0]], "g": [[0.5,0]]}]})");
  const auto res = run_cli("classify --map " + path);
  CHECK(res.exit_code == 3);
}

TEST_CASE("classify: malformed document exits with code 2") {
  const auto path = write_temp("broken.json", "{not json");
  CHECK(run_cli("classify --map " + path).exit_code == 2);
  const auto path2 = write_temp("badp.json", R"({"p": 2, "layers": []})");
  CHECK(run_cli("classify --map " + path2).exit_code == 2);
  CHECK(run_cli("classify --builtin NOPE").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("classify: explicit layer document matches the builtin") {
  const auto path = write_temp(
      "ex1.json",
      R"({"p": 2, "layers": [{"h": [[1,0],[0,0]], "g": []}, {"h": [], "g": [[0,0],[-0.16666666666666666,0]]}]})");
  const auto from_file = run_cli("classify --map " + path);
  const auto from_builtin = run_cli("classify --builtin EXAMPLE1 --J 2");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == from_builtin.output);
}

TEST_CASE("radius: figure caption values") {
  const auto r0 = run_cli("radius --family starlike-koebe --order 0 --p 1");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output.find("0.11290") != std::string::npos);
  CHECK(r0.output.find("bracket [") != std::string::npos);

  const auto r3 = run_cli("radius --family convex-bounded --order 0 --p 1 --C 1");
  CHECK(r3.exit_code == 0);
  CHECK(r3.output.find("0.164877") != std::string::npos);

  const auto r2 = run_cli("radius --family starlike-bounded --order 0 --p 1 --C 1");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("0.2928932") != std::string::npos);
}

TEST_CASE("radius: table mode and bad parameters") {
  const auto table = run_cli("radius --family convex-bounded --p 1 --C 1 --orders 0,0.5");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("order,radius") != std::string::npos);
  CHECK(table.output.find("0.164877") != std::string::npos);

  CHECK(run_cli("radius --family bogus --order 0 --p 1").exit_code == 2);
  CHECK(run_cli("radius --family starlike-koebe --order 1.5 --p 1").exit_code == 2);
}

TEST_CASE("verify: F0 inside and F3 outside their radii") {
  CHECK(run_cli("verify --builtin F0 --J 256 --mode starlike --order 0 --r 0.11 "
                "--grid 24x96 --tol 1e-5").exit_code == 0);
  CHECK(run_cli("verify --builtin F3 --J 256 --mode convex --order 0 --r 0.17 "
                "--grid 24x96 --tol 1e-5").exit_code == 1);
  CHECK(run_cli("verify --builtin IDENTITY --mode starlike --order 0.9 --r 0.5 --grid 8x32")
            .exit_code == 0);
  CHECK(run_cli("verify --builtin IDENTITY --mode convex --order 0.5 --r 0.5 --grid 8x32")
            .exit_code == 0);
}

TEST_CASE("verify: convolution method agrees on pass/fail") {
  CHECK(run_cli("verify --builtin EXAMPLE1 --mode starlike --order 0 --r 0.9 --grid 16x64 "
                "--method convolution").exit_code == 0);
  CHECK(run_cli("verify --builtin F0 --J 256 --mode starlike --order 0 --r 0.9 --grid 16x64 "
                "--method convolution").exit_code == 1);
  CHECK(run_cli("verify --builtin IDENTITY --mode starlike --order 0 --r 1.5 --grid 8x32")
            .exit_code == 2);
}

TEST_CASE("render: csv output is deterministic with the exact header") {
  const std::string out1 = "/tmp/phm_render_1.csv";
  const std::string out2 = "/tmp/phm_render_2.csv";
  CHECK(run_cli("render --builtin EXAMPLE1 --r 0.999 --n 64 --format csv --out " + out1)
            .exit_code == 0);
  CHECK(run_cli("render --builtin EXAMPLE1 --r 0.999 --n 64 --format csv --out " + out2)
            .exit_code == 0);
  const std::string body = read_file(out1);
  CHECK(body == read_file(out2));
  CHECK(body.rfind("theta,re,im\n", 0) == 0);
  // first row: theta = 0, re = 0.999 - 0.999^4/6 ~ 0.833
  CHECK(body.find("\n0,0.832") != std::string::npos);
}

TEST_CASE("render: identity circle and svg output") {
  const std::string out = "/tmp/phm_render_id.csv";
  CHECK(run_cli("render --builtin IDENTITY --r 0.5 --n 16 --format csv --out " + out).exit_code ==
        0);
  CHECK(read_file(out).find("\n0,0.5,0\n") != std::string::npos);

  const std::string svg = "/tmp/phm_render.svg";
  CHECK(run_cli("render --builtin EXAMPLE1 --r 0.9 --n 64 --format svg --out " + svg).exit_code ==
        0);
  const std::string body = read_file(svg);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("r=\"0.5\"") != std::string::npos);  // EXAMPLE1 is in HC_2^0
  CHECK(body.find(" Z\"/>") != std::string::npos);
}

TEST_CASE("render: unwritable path exits with code 4") {
  CHECK(run_cli("render --builtin IDENTITY --r 0.5 --n 16 --out /nonexistent-dir/out.csv")
            .exit_code == 4);
}
