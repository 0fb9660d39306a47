#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hofd/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hofd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hofd::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("eval records") {
  auto r = run({"eval", "--fn", "fd", "--param", "alpha=0.3", "--param", "beta=0.2,0.4",
                "--param", "gamma=1.1", "--point", "0,0"});
  CHECK(r.code == 0);
  auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["value"]["re"].get<double>() == 1.0);
  CHECK(recs[0]["value"]["im"].get<double>() == 0.0);
  CHECK(recs[0]["error"].is_null());
  CHECK(recs[0].contains("height"));
  CHECK(recs[0].contains("tail"));
  CHECK(recs[0]["inputs"]["fn"] == "fd");

  const double t = 0.4;
  r = run({"eval", "--fn", "F-degenerate", "--n", "2", "--nu", "1", "--k", "0.5", "--point",
           "0.67032004603563933,1.4918246976412703"});
  CHECK(r.code == 0);
  recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(std::abs(recs[0]["value"]["re"].get<double>() - std::cosh(t)) < 1e-14);

  r = run({"eval", "--fn", "c", "--n", "3", "--k", "0.7", "--param", "lambda=-0.7,0,0.7"});
  CHECK(r.code == 0);
  recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(std::abs(recs[0]["value"]["re"].get<double>() - 1.0) < 1e-13);
}

TEST_CASE("every registered function evaluates") {
  const std::vector<std::vector<std::string>> calls = {
      {"--fn", "2f1", "--param", "a=1", "--param", "b=1", "--param", "c=2", "--point", "0.5"},
      {"--fn", "f1", "--param", "alpha=0.3", "--param", "beta1=0.5", "--param", "beta2=0.7",
       "--param", "gamma=1.3", "--point", "0.3,0.3"},
      {"--fn", "g2", "--param", "alpha=0.3", "--param", "alpha_p=0.4", "--param", "beta=0.5",
       "--param", "beta_p=0.6", "--point", "-0.2,-0.5"},
      {"--fn", "phi", "--n", "3", "--nu", "0.7", "--k", "0.4", "--point", "0.5,0.8,2.5"},
      {"--fn", "F-connection", "--n", "3", "--nu", "0.7", "--k", "0.4", "--point",
       "0.5,0.8,2.5"},
      {"--fn", "jack", "--n", "3", "--k", "1/2", "--param", "partition=2,1", "--point", "1,2,3"},
      {"--fn", "jacobi", "--n", "2", "--k", "1/2", "--param", "partition=1",
       "--point", "0.5,2"},
  };
  for (const auto& c : calls) {
    std::vector<std::string> args{"eval"};
    args.insert(args.end(), c.begin(), c.end());
    const auto r = run(args);
    INFO(c[1], " ", r.err, r.out);
    CHECK(r.code == 0);
    CHECK(records(r.out).size() == 1);
  }
  // 2F1(1, 1, 2; 1/2) = 2 ln 2, and P_(2,1) at (1,2,3) with k = 1/2
  auto r = run({"eval", "--fn", "2f1", "--param", "a=1", "--param", "b=1", "--param", "c=2",
                "--point", "0.5"});
  CHECK(std::abs(records(r.out)[0]["value"]["re"].get<double>() - 2 * std::log(2.0)) < 1e-14);
  r = run({"eval", "--fn", "jack", "--n", "3", "--k", "1/2", "--param", "partition=2,1",
           "--point", "1,2,3"});
  CHECK(records(r.out)[0]["value"]["re"].get<double>() == 57.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--fn", "bogus", "--point", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "--fn", "fd", "--param", "alpha=0.3", "--param", "beta=0.2",
             "--param", "gamma=1.1", "--point", "0.5", "--format", "xml"})
            .code == 2);
  // exact-mode functions reject decimals
  CHECK(run({"eval", "--fn", "jack", "--n", "3", "--k", "0.5", "--param", "partition=2,1",
             "--point", "1,2,3"})
            .code == 2);

  const auto r = run({"eval", "--fn", "fd", "--param", "alpha=0.3", "--param", "beta=0.2",
                      "--param", "gamma=1.1", "--point", "0.5", "--point", "1.5"});
  CHECK(r.code == 1);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["error"].is_null());
  CHECK(recs[1]["error"]["kind"] == "domain");
}

TEST_CASE("tables") {
  auto r = run({"table", "--fn", "F-degenerate", "--n", "2", "--nu", "1", "--k", "0.5",
                "--grid", "t=0.1:2:0", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 1);  // header only

  r = run({"table", "--fn", "F-degenerate", "--n", "2", "--nu", "0.6", "--k", "0.5", "--grid",
           "t=0.1:2:20", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 21);
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::stringstream s(rows[i]);
    for (std::string c; std::getline(s, c, ',');) cells.push_back(c);
    const double v = std::stod(cells[3]);
    CHECK(v > prev);
    prev = v;
  }

  // the grid crosses |y| = 1 where the non-terminating series is rejected
  r = run({"table", "--fn", "fd", "--param", "alpha=0.3", "--param", "beta=0.2", "--param",
           "gamma=1.1", "--point", "0", "--grid", "x1=0.5:1.5:5", "--format", "json"});
  CHECK(r.code == 1);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 5);
  CHECK(recs[0]["error"].is_null());
  CHECK_FALSE(recs[4]["error"].is_null());
}

TEST_CASE("output is deterministic and round-trips") {
  const std::vector<std::string> args{"eval", "--fn", "F-degenerate", "--n", "3", "--nu", "0.77",
                                      "--k", "0.31", "--point", "0.5,0.8,2.5", "--point",
                                      "0.9,1,1.1111111111111112"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (const auto& rec : records(a.out)) {
    const double v = rec["value"]["re"].get<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    CHECK(std::stod(buf) == v);
  }

  const std::string path = "hofd_cli_test_out.csv";
  auto args2 = args;
  args2.insert(args2.end(), {"--out", path, "--format", "csv"});
  CHECK(run(args2).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(lines(ss.str()).size() == 3);
  std::remove(path.c_str());

  const std::string pts = "hofd_cli_points.txt";
  {
    std::ofstream o(pts);
    o << "0.5,0.8,2.5\n0.9,1,1.1111111111111112\n";
  }
  const auto c = run({"eval", "--fn", "F-degenerate", "--n", "3", "--nu", "0.77", "--k", "0.31",
                      "--points", pts});
  CHECK(c.code == 0);
  CHECK(records(c.out).size() == 2);
  std::remove(pts.c_str());
  CHECK(run({"eval", "--fn", "fd", "--param", "alpha=1", "--param", "beta=1", "--param",
             "gamma=2", "--points", "/nonexistent/points.txt"})
            .code != 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "theorem-3-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "hecke", "--format", "json"});
  CHECK(r.code == 0);
  for (const auto& rec : records(r.out)) CHECK(rec["pass"].get<bool>());
  CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_SUITE_END();
