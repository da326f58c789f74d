#include <doctest.h>

#include "biforms/verify.hpp"

using namespace biforms;

namespace {

Fixtures corrupted_h_prime() {
  Fixtures f = reference_fixtures();
  f.pencil_14 = BiForm::parse("X1*Y2^4 + 2*Y1*X2^4");
  return f;
}

}  // namespace

TEST_CASE("registry ids") {
  const auto& ids = check_ids();
  REQUIRE(ids.size() == 14);
  CHECK(ids.front() == "C01");
  CHECK(ids.back() == "C14");
  CHECK_THROWS_AS(run_check("C15", 1), std::invalid_argument);
  CHECK_THROWS_AS(run_check("", 1), std::invalid_argument);
}

TEST_CASE("single checks") {
  const CheckResult c12 = run_check("C12", 1);
  CHECK(c12.status == Status::Pass);
  CHECK(c12.witnesses["T"] == "0");
  CHECK(c12.witnesses["rank_first"] == 9);
  CHECK(c12.witnesses["rank_first_of"] == 9);
  CHECK(c12.witnesses["rank_second"] == 9);

  const CheckResult c05 = run_check("C05", 99);
  CHECK(c05.status == Status::Pass);
  CHECK(c05.witnesses["pairs"] == 121);

  const CheckResult c11 = run_check("C11", 1);
  CHECK(c11.status == Status::Pass);
  CHECK(c11.witnesses["dim_V"] == 9);
  CHECK(c11.witnesses["weights"] == Json::parse("[[0], [-1, 1], [-2, 2], [-3, 3], [-4, 4]]"));
  CHECK(c11.witnesses["equations"].size() == 5);
  CHECK(c11.witnesses["equations"][0] == "alpha_0 - beta_2 = 0");

  const CheckResult c04 = run_check("C04", 3);
  CHECK(c04.status == Status::Pass);
  for (const auto& row : c04.witnesses["table"]) CHECK(row["ratio"] == "1");
}

TEST_CASE("corrupted fixtures are caught") {
  const CheckResult c12 = run_check("C12", 1, corrupted_h_prime());
  CHECK(c12.status == Status::Fail);
  CHECK(c12.witnesses["T"] != "0");

  Fixtures wrong_slice = reference_fixtures();
  wrong_slice.slice_summands[1][0] = BiForm::parse("10*X1*X2^3*Y2^3 + 4*Y1*X2^5*Y2");
  CHECK(run_check("C11", 1, wrong_slice).status == Status::Fail);

  Fixtures wrong_curve = reference_fixtures();
  wrong_curve.curve_12 = BiForm::parse("X1*Y2^2 + Y1*X2*Y2");
  CHECK(run_check("C11", 1, wrong_curve).status == Status::Fail);

  Fixtures degenerate_witness = reference_fixtures();
  degenerate_witness.witness_16 = BiForm::parse("X1*X2^6 + Y1*Y2^6");
  CHECK(run_check("C11", 1, degenerate_witness).status == Status::Fail);
}

TEST_CASE("reports are deterministic and well formed") {
  const Report first = run_all(7);
  const Report second = run_all(7);
  CHECK(first.checks.size() == 14);
  CHECK(emit(first, Format::Json) == emit(second, Format::Json));
  CHECK(emit(first, Format::Markdown) == emit(second, Format::Markdown));

  // Order and content do not depend on concurrent scheduling.
  for (std::size_t i = 0; i < first.checks.size(); ++i) {
    CHECK(first.checks[i].id == check_ids()[i]);
    const CheckResult alone = run_check(first.checks[i].id, 7);
    CHECK(alone.witnesses == first.checks[i].witnesses);
    CHECK(alone.status == first.checks[i].status);
  }

  const Json doc = Json::parse(emit(first, Format::Json));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "seed", "checks", "summary"});
  CHECK(doc["seed"] == 7);
  CHECK(doc["version"] == std::string(toolkit_version()));
  std::vector<std::string> check_keys;
  for (const auto& [k, v] : doc["checks"][0].items()) check_keys.push_back(k);
  CHECK(check_keys == std::vector<std::string>{"id", "status", "witnesses", "ms"});
  const int total = doc["summary"]["pass"].get<int>() + doc["summary"]["fail"].get<int>() +
                    doc["summary"]["degenerate"].get<int>();
  CHECK(total == static_cast<int>(doc["checks"].size()));
  CHECK(doc["summary"]["pass"] == 14);
  for (const auto& c : doc["checks"]) CHECK(c["ms"] == 0);

  const Json timed = Json::parse(emit(first, Format::Json, true));
  std::int64_t total_ms = 0;
  for (const auto& c : timed["checks"]) total_ms += c["ms"].get<std::int64_t>();
  CHECK(total_ms >= 0);
}

TEST_CASE("emit edge cases") {
  const Report empty{std::string(toolkit_version()), 5, {}};
  const Json doc = Json::parse(emit(empty, Format::Json));
  CHECK(doc["checks"].empty());
  CHECK(doc["summary"]["pass"] == 0);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["degenerate"] == 0);

  Report one{std::string(toolkit_version()), 5, {run_check("C05", 5)}};
  const std::string md = emit(one, Format::Markdown);
  CHECK(md.find("| C05 |") != std::string::npos);
  CHECK(md.find("## C05: pass") != std::string::npos);

  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("md") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
