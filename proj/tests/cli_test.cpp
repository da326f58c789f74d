#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace biforms;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args, const Fixtures& fixtures = reference_fixtures()) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, fixtures);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("transvect") {
  auto r = call({"transvect", "--lhs", "X^2*Y^6", "--rhs", "X^4", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "360*X^4*Y^4\n");

  r = call({"transvect", "--lhs", "X1*X2^2*Y2^6 + Y1*X2^6*Y2^2", "--rhs", "X1*Y2^4 + Y1*X2^4", "--r", "1", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = call({"transvect", "--lhs", "X1*X2", "--rhs", "Y1*Y2", "--r", "1", "--s", "1"});
  CHECK(r.out == "1\n");

  CHECK(call({"transvect", "--lhs", "X", "--rhs", "Y^2", "--r", "2"}).code == 2);
  CHECK(call({"transvect", "--lhs", "X +", "--rhs", "X", "--r", "1"}).code == 2);
  CHECK(call({"transvect", "--lhs", "X", "--rhs", "X"}).code == 2);
  CHECK(call({"transvect", "--lhs", "X1 + X2^2", "--rhs", "X1", "--r", "0"}).code == 2);
}

TEST_CASE("kernel") {
  const auto r = call({"kernel", "--form", "X1*X2^3*Y2^3 + Y1*(X2^4*Y2^2 + X2^2*Y2^4)", "--r", "1", "--s", "2",
                       "--source", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank: 5\n") != std::string::npos);
  CHECK(r.out.find("kernel dim: 1\n") != std::string::npos);

  const auto onto = call({"kernel", "--form", "X1*X2^2*Y2^6 + Y1*X2^6*Y2^2", "--r", "1", "--s", "2", "--source", "1,4"});
  CHECK(onto.out.find("rank: 9\n") != std::string::npos);

  CHECK(call({"kernel", "--form", "X1*X2", "--r", "2", "--s", "0", "--source", "1,1"}).code == 2);
  CHECK(call({"kernel", "--form", "X1*X2", "--r", "1", "--s", "0", "--source", "1"}).code == 2);
}

TEST_CASE("curve") {
  auto r = call({"curve", "--form", "X1*Y2^2 + Y1*X2^2", "--span"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = call({"curve", "--form", "X1*Y2^2 + Y1*X2^2", "--degree"});
  CHECK(r.out == "1\n");
  r = call({"curve", "--form", "X1*Y2^2 + Y1*X2^2", "--branch"});
  CHECK(r.out == "4*X1*Y1\ndegree: 2\nsquarefree: yes\n");
  r = call({"curve", "--form", "X1^2*X2^3", "--branch"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degenerate") == 0);
  CHECK(call({"curve", "--form", "X1*Y2^2", "--span", "--degree"}).code == 2);
  CHECK(call({"curve", "--form", "X1*Y2^2"}).code == 2);
  CHECK(call({"curve", "--form", "0", "--span"}).code == 2);
}

TEST_CASE("verify exit codes and output") {
  auto r = call({"verify", "--check", "C12"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["checks"][0]["id"] == "C12");
  CHECK(doc["summary"]["pass"] == 1);

  Fixtures broken = reference_fixtures();
  broken.pencil_14 = BiForm::parse("X1*Y2^4 + 2*Y1*X2^4");
  r = call({"verify", "--check", "C12"}, broken);
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["checks"][0]["status"] == "fail");

  CHECK(call({"verify", "--check", "C99"}).code == 2);
  CHECK(call({"verify", "--format", "xml"}).code == 2);
  CHECK(call({"verify", "--seed", "abc"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  r = call({"verify", "--check", "C05", "--format", "md"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# Verification report") == 0);

  const std::string path = "cli_test_report.json";
  r = call({"verify", "--check", "C14", "--seed", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  const Json written = Json::parse(file);
  CHECK(written["seed"] == 3);
  CHECK(written["checks"][0]["status"] == "pass");
  std::remove(path.c_str());
}
