#ifndef BIFORMS_VERIFY_HPP
#define BIFORMS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "biforms/forms.hpp"

namespace biforms {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Degenerate };

std::string_view to_string(Status status);

struct CheckResult {
  std::string id;
  Status status = Status::Pass;
  Json witnesses = Json::object();
  double ms = 0;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  int count(Status status) const;
};

// Toolkit version recorded in every report.
std::string_view toolkit_version();

// The explicit forms the registry checks against. Tests swap in perturbed
// copies to make sure a wrong fixture is caught.
struct Fixtures {
  BiForm pencil_18;    // the (1,8) biform H
  BiForm pencil_14;    // the (1,4) biform H' with T^(1,2)(H, H') = 0
  BiForm witness_16;   // a (1,6) biform whose kernel map is non-degenerate
  BiForm curve_12;     // the smooth (1,2) curve X1 Y2^2 + Y1 X2^2
  // Spanning vectors of the summands W_0, ..., W_4 of the (1,6) slice.
  std::vector<std::vector<BiForm>> slice_summands;
};

const Fixtures& reference_fixtures();

// Registry ids C01..C14 in order.
const std::vector<std::string>& check_ids();

// Runs one registry entry. Throws std::invalid_argument for an unknown id.
// A check that throws internally is reported as failed with the message.
CheckResult run_check(std::string_view id, std::uint64_t seed);
CheckResult run_check(std::string_view id, std::uint64_t seed, const Fixtures& fixtures);

// All checks, run concurrently; results come back in registry order.
Report run_all(std::uint64_t seed);
Report run_all(std::uint64_t seed, const Fixtures& fixtures);

enum class Format { Json, Markdown };

// Throws std::invalid_argument for anything but "json" or "md".
Format parse_format(std::string_view name);

// Timings are the only scheduling-dependent part of a report; unless
// include_timing is set they are written as 0 so equal seeds give equal bytes.
std::string emit(const Report& report, Format format, bool include_timing = false);

}  // namespace biforms

#endif  // BIFORMS_VERIFY_HPP
