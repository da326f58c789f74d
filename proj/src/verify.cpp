#include "biforms/verify.hpp"

#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include "checks.hpp"

namespace biforms {

namespace {

struct Entry {
  const char* id;
  const char* title;
  checks::CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"C01", "transvectant symmetry and bilinearity", checks::transvectant_identities},
      {"C02", "bitransvectant factorization", checks::bitransvectant_factorization},
      {"C03", "(1,s) pencil formula", checks::linear_pencil_formula},
      {"C04", "apolar proportionality table", checks::apolar_table},
      {"C05", "Clebsch-Gordan dimensions", checks::clebsch_gordan},
      {"C06", "SL2 x SL2 equivariance", checks::equivariance},
      {"C07", "branch degree", checks::branch_degree},
      {"C08", "hyperplane degree and span", checks::curve_degree_and_span},
      {"C09", "almost-free samples", checks::almost_free},
      {"C10", "scalar and Plücker parity", checks::parity},
      {"C11", "(1,6) slice", checks::slice_16},
      {"C12", "(1,8) pencil", checks::pencil_18},
      {"C13", "plane curve slices", checks::plane_curve_slices},
      {"C14", "dimension bookkeeping", checks::dimension_bookkeeping},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (id == e.id) return e;
  }
  throw std::invalid_argument("unknown check id: " + std::string(id));
}

// Each check draws from its own stream so results do not depend on which
// checks run or in what order.
std::uint64_t check_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

BiForm bi(std::string_view text) { return BiForm::parse(text); }

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Degenerate:
      return "degenerate";
  }
  return "fail";
}

int Report::count(Status status) const {
  int n = 0;
  for (const auto& c : checks) n += c.status == status ? 1 : 0;
  return n;
}

std::string_view toolkit_version() { return "0.1.0"; }

const Fixtures& reference_fixtures() {
  static const Fixtures fixtures{
      bi("X1*X2^2*Y2^6 + Y1*X2^6*Y2^2"),
      bi("X1*Y2^4 + Y1*X2^4"),
      bi("X1*X2^3*Y2^3 + Y1*(X2^4*Y2^2 + X2^2*Y2^4)"),
      bi("X1*Y2^2 + Y1*X2^2"),
      {{bi("X1*X2^2*Y2^4 + Y1*X2^4*Y2^2")},
       {bi("10*X1*X2^3*Y2^3 + 3*Y1*X2^5*Y2"), bi("3*X1*X2*Y2^5 + 10*Y1*X2^3*Y2^3")},
       {bi("15*X1*X2^4*Y2^2 + Y1*X2^6"), bi("X1*Y2^6 + 15*Y1*X2^2*Y2^4")},
       {bi("X1*X2^5*Y2"), bi("Y1*X2*Y2^5")},
       {bi("X1*X2^6"), bi("Y1*Y2^6")}},
  };
  return fixtures;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

CheckResult run_check(std::string_view id, std::uint64_t seed) { return run_check(id, seed, reference_fixtures()); }

CheckResult run_check(std::string_view id, std::uint64_t seed, const Fixtures& fixtures) {
  const Entry& entry = find_entry(id);
  CheckResult result;
  result.id = entry.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    checks::Outcome outcome = entry.fn(check_seed(seed, entry.id), fixtures);
    result.status = outcome.status;
    result.witnesses = std::move(outcome.witnesses);
  } catch (const std::exception& e) {
    result.status = Status::Fail;
    result.witnesses = {{"error", e.what()}};
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return result;
}

Report run_all(std::uint64_t seed) { return run_all(seed, reference_fixtures()); }

Report run_all(std::uint64_t seed, const Fixtures& fixtures) {
  std::vector<std::future<CheckResult>> pending;
  for (const auto& id : check_ids()) {
    pending.push_back(std::async(std::launch::async, [id, seed, &fixtures] { return run_check(id, seed, fixtures); }));
  }
  Report report{std::string(toolkit_version()), seed, {}};
  for (auto& f : pending) report.checks.push_back(f.get());
  return report;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format: " + std::string(name) + " (expected json or md)");
}

std::string emit(const Report& report, Format format, bool include_timing) {
  auto ms = [&](const CheckResult& c) { return include_timing ? static_cast<std::int64_t>(c.ms + 0.5) : 0; };
  if (format == Format::Json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"witnesses", c.witnesses}, {"ms", ms(c)}});
    }
    const Json doc = {{"version", report.version},
                      {"seed", report.seed},
                      {"checks", checks},
                      {"summary",
                       {{"pass", report.count(Status::Pass)},
                        {"fail", report.count(Status::Fail)},
                        {"degenerate", report.count(Status::Degenerate)}}}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "- version: " << report.version << "\n";
  out << "- seed: " << report.seed << "\n";
  out << "- pass: " << report.count(Status::Pass) << ", fail: " << report.count(Status::Fail)
      << ", degenerate: " << report.count(Status::Degenerate) << "\n\n";
  out << "| id | check | status | ms |\n|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    const char* title = "";
    for (const auto& e : registry()) {
      if (c.id == e.id) title = e.title;
    }
    out << "| " << c.id << " | " << title << " | " << to_string(c.status) << " | " << ms(c) << " |\n";
  }
  for (const auto& c : report.checks) {
    out << "\n## " << c.id << ": " << to_string(c.status) << "\n\n```json\n" << c.witnesses.dump(2) << "\n```\n";
  }
  return out.str();
}

}  // namespace biforms
