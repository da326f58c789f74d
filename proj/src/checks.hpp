#ifndef BIFORMS_SRC_CHECKS_HPP
#define BIFORMS_SRC_CHECKS_HPP

#include <cstdint>

#include "biforms/verify.hpp"

namespace biforms::checks {

struct Outcome {
  Status status = Status::Pass;
  Json witnesses = Json::object();
};

using CheckFn = Outcome (*)(std::uint64_t seed, const Fixtures& fixtures);

Outcome transvectant_identities(std::uint64_t seed, const Fixtures& fixtures);
Outcome bitransvectant_factorization(std::uint64_t seed, const Fixtures& fixtures);
Outcome linear_pencil_formula(std::uint64_t seed, const Fixtures& fixtures);
Outcome apolar_table(std::uint64_t seed, const Fixtures& fixtures);
Outcome clebsch_gordan(std::uint64_t seed, const Fixtures& fixtures);
Outcome equivariance(std::uint64_t seed, const Fixtures& fixtures);
Outcome branch_degree(std::uint64_t seed, const Fixtures& fixtures);
Outcome curve_degree_and_span(std::uint64_t seed, const Fixtures& fixtures);
Outcome almost_free(std::uint64_t seed, const Fixtures& fixtures);
Outcome parity(std::uint64_t seed, const Fixtures& fixtures);
Outcome slice_16(std::uint64_t seed, const Fixtures& fixtures);
Outcome pencil_18(std::uint64_t seed, const Fixtures& fixtures);
Outcome plane_curve_slices(std::uint64_t seed, const Fixtures& fixtures);
Outcome dimension_bookkeeping(std::uint64_t seed, const Fixtures& fixtures);

}  // namespace biforms::checks

#endif  // BIFORMS_SRC_CHECKS_HPP
