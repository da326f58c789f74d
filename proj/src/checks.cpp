#include "checks.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "biforms/actions.hpp"
#include "biforms/binary_ops.hpp"
#include "biforms/curves.hpp"
#include "biforms/parse.hpp"
#include "biforms/sampling.hpp"
#include "biforms/transvectant.hpp"

namespace biforms::checks {

namespace {

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::string str(const BiForm& f) { return to_string(f.poly()); }
std::string str(const BinaryForm& f) { return to_string(f.poly()); }

const Mat2 kSwap{0, 1, 1, 0};

// Bidegrees sampled for the degree checks.
const std::vector<std::pair<int, int>> kDegreeGrid{{1, 4}, {1, 6}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {3, 4}};
constexpr int kDegreeSamples = 100;
constexpr int kDegreeThreshold = 95;

// (alpha_0..alpha_b, beta_0..beta_b) of X1 P + Y1 Q with P, Q in binomial
// coordinates.
std::vector<Rat> pencil_binomial_coords(const BiForm& f) {
  const auto [p, q] = split_linear(f);
  auto out = binomial_coeffs(p);
  const auto beta = binomial_coeffs(q);
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

// Inverse of pencil_binomial_coords as a matrix: column k is the
// biform_basis(1, b) coordinate vector of the k-th binomial basis element.
QMat binomial_to_monomial(int b) {
  const std::size_t n = static_cast<std::size_t>(2 * (b + 1));
  std::vector<std::vector<Rat>> columns;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rat> unit(b + 1);
    const bool first = k <= static_cast<std::size_t>(b);
    unit[first ? k : k - (b + 1)] = 1;
    const BinaryForm part = from_binomial_coeffs(b, unit);
    const BinaryForm linear = first ? BinaryForm::parse("X") : BinaryForm::parse("Y");
    columns.push_back(BiForm::tensor(linear, part).coefficients());
  }
  return QMat::from_columns(columns, n);
}

bool subspace_invariant(const Subspace& w, int d, const G3Element& g) {
  for (const TernaryForm& f : forms_of(w, d)) {
    if (!w.contains(act_ternary(g, f).coefficients())) return false;
  }
  return true;
}

Subspace span_of(const std::vector<std::string>& texts, int d) {
  std::vector<TernaryForm> forms;
  for (const auto& t : texts) forms.push_back(TernaryForm::parse(t));
  return span_of_forms(forms, d);
}

std::vector<G3Element> symmetric_group() {
  std::vector<G3Element> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    out.push_back(G3Element::permutation(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Outcome transvectant_identities(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  constexpr int kInstances = 100;
  int symmetry_failures = 0;
  int bilinearity_failures = 0;
  int degree_failures = 0;
  for (int k = 0; k < kInstances; ++k) {
    const int d = s.integer(0, 6);
    const int e = s.integer(0, 6);
    const int r = s.integer(0, std::min(d, e));
    const BinaryForm p = s.binary_form(d);
    const BinaryForm p0 = s.binary_form(d);
    const BinaryForm q = s.binary_form(e);
    const Rat alpha = s.coefficient();
    const BinaryForm t = transvectant(p, q, r);
    const Rat sign = r % 2 ? -1 : 1;
    if (transvectant(q, p, r) != sign * t) ++symmetry_failures;
    if (transvectant(alpha * p + p0, q, r) != alpha * t + transvectant(p0, q, r)) ++bilinearity_failures;
    if (t.degree() != d + e - 2 * r) ++degree_failures;
  }
  Outcome out;
  out.witnesses = {{"instances", kInstances},
                   {"symmetry_failures", symmetry_failures},
                   {"bilinearity_failures", bilinearity_failures},
                   {"degree_failures", degree_failures},
                   {"T1(X,Y)", str(transvectant(BinaryForm::parse("X"), BinaryForm::parse("Y"), 1))}};
  out.status = pass_if(symmetry_failures == 0 && bilinearity_failures == 0 && degree_failures == 0);
  return out;
}

Outcome bitransvectant_factorization(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  constexpr int kInstances = 100;
  int factor_failures = 0;
  int symmetry_failures = 0;
  for (int k = 0; k < kInstances; ++k) {
    const int a = s.integer(0, 6), b = s.integer(0, 6), a2 = s.integer(0, 6), b2 = s.integer(0, 6);
    const int r = s.integer(0, std::min(a, a2));
    const int t = s.integer(0, std::min(b, b2));
    const BinaryForm p1 = s.binary_form(a), p2 = s.binary_form(b);
    const BinaryForm q1 = s.binary_form(a2), q2 = s.binary_form(b2);
    const BiForm f = BiForm::tensor(p1, p2);
    const BiForm g = BiForm::tensor(q1, q2);
    const BiForm lhs = bitransvectant(f, g, r, t);
    if (lhs != BiForm::tensor(transvectant(p1, q1, r), transvectant(p2, q2, t))) ++factor_failures;
    const Rat sign = (r + t) % 2 ? -1 : 1;
    if (bitransvectant(g, f, r, t) != sign * lhs) ++symmetry_failures;
  }
  Outcome out;
  out.witnesses = {{"instances", kInstances},
                   {"factorization_failures", factor_failures},
                   {"symmetry_failures", symmetry_failures}};
  out.status = pass_if(factor_failures == 0 && symmetry_failures == 0);
  return out;
}

Outcome linear_pencil_formula(std::uint64_t seed, const Fixtures& fixtures) {
  Sampler s(seed);
  constexpr int kInstances = 100;
  int failures = 0;
  for (int k = 0; k < kInstances; ++k) {
    const int b = s.integer(0, 8);
    const int b2 = s.integer(0, 8);
    const int t = s.integer(0, std::min(b, b2));
    const BiForm f = s.biform(1, b);
    const BiForm g = s.biform(1, b2);
    if (specialized_1s(f, g, t) != bitransvectant(f, g, 1, t)) ++failures;
  }
  const auto [p, q] = split_linear(fixtures.pencil_18);
  const auto [p2, q2] = split_linear(fixtures.pencil_14);
  const bool fixture_agrees =
      specialized_1s(fixtures.pencil_18, fixtures.pencil_14, 2) == bitransvectant(fixtures.pencil_18, fixtures.pencil_14, 1, 2);
  Outcome out;
  out.witnesses = {{"instances", kInstances},
                   {"failures", failures},
                   {"fixture_terms", {str(transvectant(p, q2, 2)), str(transvectant(q, p2, 2))}},
                   {"fixture_agrees", fixture_agrees}};
  out.status = pass_if(failures == 0 && fixture_agrees);
  return out;
}

Outcome apolar_table(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  constexpr int kPairs = 50;
  Json table = Json::array();
  bool ok = true;
  for (int d = 1; d <= 6; ++d) {
    for (int e = 1; e <= d; ++e) {
      std::optional<Rat> ratio;
      bool constant = true;
      for (int k = 0; k < kPairs; ++k) {
        const BinaryForm p = s.binary_form(d);
        const BinaryForm q = s.binary_form(e);
        const BinaryForm a = apolar_diffop(p, q);
        const BinaryForm t = transvectant(p, q, e);
        if (t.is_zero()) {
          constant = constant && a.is_zero();
          continue;
        }
        const auto tc = t.coefficients();
        const auto ac = a.coefficients();
        std::size_t i = 0;
        while (is_zero(tc[i])) ++i;
        const Rat here = ac[i] / tc[i];
        if (a != here * t || (ratio && *ratio != here)) constant = false;
        ratio = here;
      }
      ok = ok && constant && ratio.has_value();
      table.push_back({{"d", d},
                       {"d_prime", e},
                       {"ratio", ratio ? to_string(*ratio) : std::string("undetermined")},
                       {"constant", constant}});
    }
  }
  Outcome out;
  out.witnesses = {{"pairs_per_entry", kPairs}, {"table", table}};
  out.status = pass_if(ok);
  return out;
}

Outcome clebsch_gordan(std::uint64_t, const Fixtures&) {
  int checked = 0;
  int failures = 0;
  for (int d = 0; d <= 10; ++d) {
    for (int e = 0; e <= 10; ++e) {
      int total = 0;
      for (int c : cg_components(d, e)) total += static_cast<int>(binary_basis(c).size());
      const auto product = binary_basis(d).size() * binary_basis(e).size();
      if (static_cast<std::size_t>(total) != product) ++failures;
      ++checked;
    }
  }
  Json example = Json::array();
  for (int c : cg_components(6, 2)) example.push_back(c);
  Outcome out;
  out.witnesses = {{"pairs", checked}, {"failures", failures}, {"components(6,2)", example}};
  out.status = pass_if(failures == 0);
  return out;
}

Outcome equivariance(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  constexpr int kPairs = 100;
  int identities = 0;
  int failures = 0;
  for (int k = 0; k < kPairs; ++k) {
    const GroupPair g = s.sl2_pair();
    const int a = s.integer(0, 2), b = s.integer(0, 6), a2 = s.integer(0, 2), b2 = s.integer(0, 6);
    const BiForm f = s.biform(a, b);
    const BiForm h = s.biform(a2, b2);
    const BiForm gf = act(g, f);
    const BiForm gh = act(g, h);
    for (int r = 0; r <= std::min(a, a2); ++r) {
      for (int t = 0; t <= std::min(b, b2); ++t) {
        ++identities;
        if (!g.is_sl() || bitransvectant(gf, gh, r, t) != act(g, bitransvectant(f, h, r, t))) ++failures;
      }
    }
  }
  Outcome out;
  out.witnesses = {{"group_pairs", kPairs}, {"identities", identities}, {"failures", failures}};
  out.status = pass_if(failures == 0);
  return out;
}

Outcome branch_degree(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  Json grid = Json::array();
  bool ok = true;
  for (const auto& [a, b] : kDegreeGrid) {
    const int expected = 2 * a * (b - 1);
    const int genus = (a - 1) * (b - 1);
    const int hurwitz = 2 * genus - 2 + 2 * b;
    int hits = 0;
    Json exceptions = Json::array();
    for (int k = 0; k < kDegreeSamples; ++k) {
      const BranchForm br = branch_form(s.biform(a, b));
      if (br.degenerate) {
        exceptions.push_back({{"sample", k}, {"degenerate", "resultant vanishes identically"}});
      } else if (!is_squarefree(br.form)) {
        exceptions.push_back({{"sample", k}, {"degenerate", "repeated branch point"}});
      } else if (br.form.degree() == expected) {
        ++hits;
      }
    }
    const bool point_ok = hits >= kDegreeThreshold && expected == hurwitz;
    ok = ok && point_ok;
    grid.push_back({{"a", a},
                    {"b", b},
                    {"expected_degree", expected},
                    {"riemann_hurwitz", hurwitz},
                    {"hits", hits},
                    {"samples", kDegreeSamples},
                    {"exceptions", exceptions}});
  }
  Outcome out;
  out.witnesses = {{"grid", grid}};
  out.status = pass_if(ok);
  return out;
}

Outcome curve_degree_and_span(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  Json grid = Json::array();
  bool ok = true;
  for (const auto& [a, b] : kDegreeGrid) {
    int hits = 0;
    int contradictions = 0;
    Json exceptions = Json::array();
    for (int k = 0; k < kDegreeSamples; ++k) {
      const BiForm f = s.biform(a, b);
      const auto hyperplane_seed = static_cast<std::uint64_t>(s.integer(0, 1 << 30));
      if (f.is_zero()) {
        exceptions.push_back({{"sample", k}, {"degenerate", "zero form"}});
        continue;
      }
      const CurveMap cm = phi_components(f);
      const int degree = hyperplane_degree(cm, hyperplane_seed);
      const int span = span_dim(cm);
      if (degree > a || span > a) ++contradictions;
      if (degree == a && span == a) {
        ++hits;
      } else {
        exceptions.push_back({{"sample", k},
                              {"degenerate", "degree or span drop"},
                              {"hyperplane_degree", degree},
                              {"span_dim", span},
                              {"hyperplane_seed", hyperplane_seed}});
      }
    }
    ok = ok && hits >= kDegreeThreshold && contradictions == 0;
    grid.push_back({{"a", a}, {"b", b}, {"hits", hits}, {"samples", kDegreeSamples}, {"exceptions", exceptions}});
  }
  Outcome out;
  out.witnesses = {{"grid", grid}};
  out.status = pass_if(ok);
  return out;
}

Outcome almost_free(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  constexpr int kSamples = 50;
  Json grid = Json::array();
  bool ok = true;
  for (int b = 5; b <= 8; ++b) {
    for (int a = 0; a < b; ++a) {
      int grassmannian_free = 0;
      for (int k = 0; k < kSamples; ++k) {
        Subspace w;
        do {
          w = s.subspace(b + 1, a + 1);
        } while (w.dim() != static_cast<std::size_t>(a + 1));
        if (subspace_stabilizer_dim(w) == 0) ++grassmannian_free;
      }
      Json point = {{"a", a}, {"b", b}, {"grassmannian_free", grassmannian_free}};
      bool point_ok = grassmannian_free == kSamples;
      if (a >= 1) {
        int biform_free = 0;
        for (int k = 0; k < kSamples; ++k) {
          BiForm f;
          do {
            f = s.biform(a, b);
          } while (f.is_zero());
          if (projective_stabilizer_dim(f) == 0) ++biform_free;
        }
        point["biform_free"] = biform_free;
        point_ok = point_ok && biform_free == kSamples;
      }
      point["samples"] = kSamples;
      ok = ok && point_ok;
      grid.push_back(point);
    }
  }
  Outcome out;
  out.witnesses = {{"grid", grid}};
  out.status = pass_if(ok);
  return out;
}

Outcome parity(std::uint64_t seed, const Fixtures&) {
  Sampler s(seed);
  const Mat2 minus = Mat2::scalar(-1);
  Json even = Json::array();
  bool ok = true;
  for (int b = 0; b <= 10; ++b) {
    const QMat m = action_matrix(minus, b);
    const std::size_t n = binary_basis(b).size();
    const bool trivial = m == QMat::identity(n);
    QMat negated(n, n);
    for (std::size_t i = 0; i < n; ++i) negated(i, i) = -1;
    const bool expected = b % 2 == 0 ? trivial : m == negated;
    ok = ok && expected;
    if (b % 2 == 0) even.push_back({{"b", b}, {"trivial", trivial}});
  }

  constexpr int kSamples = 20;
  Json odd = Json::array();
  for (int b = 5; b <= 9; b += 2) {
    for (int a = 1; a < b; ++a) {
      int matches = 0;
      int plucker_matches = 0;
      const Rat expected = (a + 1) % 2 ? -1 : 1;
      for (int k = 0; k < kSamples; ++k) {
        Subspace w;
        do {
          w = s.subspace(b + 1, a + 1);
        } while (w.dim() != static_cast<std::size_t>(a + 1));
        const Rat scalar = det_scalar(minus, w);
        if (scalar == expected) ++matches;
        const QMat basis = w.basis().transpose();
        auto scaled = top_minors(basis);
        for (auto& x : scaled) x *= scalar;
        if (top_minors(action_matrix(minus, b) * basis) == scaled) ++plucker_matches;
      }
      // -1 on E (x) det E^dual: (-1) * expected^(-1)
      const Rat twisted = Rat(-1) / expected;
      const bool point_ok = matches == kSamples && plucker_matches == kSamples && (a % 2 != 0 || twisted == 1);
      ok = ok && point_ok;
      odd.push_back({{"a", a},
                     {"b", b},
                     {"det_scalar", to_string(expected)},
                     {"matches", matches},
                     {"plucker_matches", plucker_matches},
                     {"samples", kSamples},
                     {"twisted_scalar", to_string(twisted)}});
    }
  }
  Outcome out;
  out.witnesses = {{"even_b", even}, {"odd_b", odd}};
  out.status = pass_if(ok);
  return out;
}

Outcome slice_16(std::uint64_t, const Fixtures& fixtures) {
  bool ok = true;
  Json w;

  // Non-degeneracy at the witness and smoothness of the kernel curve.
  const QMat witness_map = transvectant_matrix(fixtures.witness_16, 1, 2, 1, 2);
  const std::size_t witness_rank = rank(witness_map);
  const Subspace witness_kernel = kernel_basis(witness_map);
  w["witness_rank"] = witness_rank;
  w["witness_kernel_dim"] = witness_kernel.dim();
  ok = ok && witness_rank == 5 && witness_kernel.dim() == 1;
  if (witness_kernel.dim() == 1) {
    const BiForm generator = BiForm::from_coefficients(1, 2, witness_kernel.basis_vector(0));
    const BranchForm br = branch_form(generator);
    const auto [p, q] = split_linear(generator);
    const Rat pencil_resultant = p.is_zero() || q.is_zero() ? Rat(0) : sylvester_resultant(p, q);
    const bool squarefree = !br.degenerate && is_squarefree(br.form);
    w["generator"] = str(generator);
    w["branch_form"] = str(br.form);
    w["branch_squarefree"] = squarefree;
    w["pencil_resultant"] = to_string(pencil_resultant);
    ok = ok && squarefree && br.form.degree() == 2 && !is_zero(pencil_resultant);
  }

  // The slice V = { H : T^(1,2)(H, C) = 0 }.
  const QMat slice_map = transvectant_matrix(fixtures.curve_12, 1, 2, 1, 6, FixedSlot::Second);
  const Subspace v = kernel_basis(slice_map);
  w["dim_V"] = v.dim();
  ok = ok && v.dim() == 9;

  const Echelon equations = rref(slice_map * binomial_to_monomial(6));
  QMat expected(5, 14);
  for (std::size_t i = 0; i < 5; ++i) {
    expected(i, i) = 1;
    expected(i, 7 + i + 2) = -1;
  }
  QMat found(equations.rank, 14);
  for (std::size_t i = 0; i < equations.rank; ++i) {
    for (std::size_t j = 0; j < 14; ++j) found(i, j) = equations.reduced(i, j);
  }
  const bool equations_match = found == expected;
  Json eq = Json::array();
  for (std::size_t i = 0; i < equations.rank; ++i) {
    std::string text;
    for (std::size_t j = 0; j < 14; ++j) {
      if (is_zero(found(i, j))) continue;
      const std::string name = (j < 7 ? "alpha_" : "beta_") + std::to_string(j < 7 ? j : j - 7);
      if (!text.empty()) text += found(i, j) < 0 ? " - " : " + ";
      else if (found(i, j) < 0) text += "-";
      const Rat mag = abs(found(i, j));
      text += (mag == 1 ? "" : to_string(mag) + "*") + name;
    }
    eq.push_back(text + " = 0");
  }
  w["equations"] = eq;
  w["equations_match"] = equations_match;
  ok = ok && equations_match;

  // The decomposition V = W_0 + ... + W_4.
  const Torus twisted{{0, 2, 0, 1}, -4};
  const GroupPair swap{kSwap, kSwap};
  std::vector<std::vector<Rat>> all;
  Json weights = Json::array();
  bool members = true;
  bool weights_ok = fixtures.slice_summands.size() == 5;
  bool swap_ok = true;
  for (std::size_t i = 0; i < fixtures.slice_summands.size(); ++i) {
    const auto& summand = fixtures.slice_summands[i];
    std::vector<std::vector<Rat>> vectors;
    for (const BiForm& f : summand) vectors.push_back(f.coefficients());
    const Subspace wi = Subspace::span(14, vectors);
    Json wts = Json::array();
    std::vector<int> found_weights;
    for (const BiForm& f : summand) {
      members = members && v.contains(f.coefficients());
      const auto c = pencil_binomial_coords(f);
      for (std::size_t j = 0; j + 2 < 7; ++j) members = members && c[j] == c[7 + j + 2];
      all.push_back(f.coefficients());
      const auto k = weight_of(f, twisted);
      if (k) {
        wts.push_back(*k);
        found_weights.push_back(*k);
      } else {
        wts.push_back(nullptr);
      }
      swap_ok = swap_ok && wi.contains(act(swap, f).coefficients());
    }
    std::sort(found_weights.begin(), found_weights.end());
    const int n = static_cast<int>(i);
    const std::vector<int> wanted = n == 0 ? std::vector<int>{0} : std::vector<int>{-n, n};
    weights_ok = weights_ok && found_weights == wanted && wi.dim() == wanted.size();
    weights.push_back(wts);
  }
  const bool spans = all.size() == 9 && Subspace::span(14, all) == v;
  w["members_of_V"] = members;
  w["summands_span_V"] = spans;
  w["weights"] = weights;
  w["swap_preserves_summands"] = swap_ok;
  ok = ok && members && spans && weights_ok && swap_ok;

  // V is preserved by the stabilizer of C.
  const GroupPair torus_element{Mat2::diagonal(1, 4), Mat2::diagonal(1, 2)};
  bool v_invariant = true;
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const BiForm f = BiForm::from_coefficients(1, 6, v.basis_vector(k));
    v_invariant = v_invariant && v.contains(act(swap, f).coefficients()) &&
                  v.contains(act(torus_element, f).coefficients());
  }
  w["V_invariant"] = v_invariant;
  ok = ok && v_invariant;

  // Stabilizer of C.
  const BiForm& c = fixtures.curve_12;
  const bool swap_fixes = act(swap, c) == c;
  bool torus_scales = true;
  for (const Rat& alpha : {Rat(2), Rat(3), Rat(-1, 2)}) {
    const GroupPair t{Mat2::diagonal(1, alpha * alpha), Mat2::diagonal(1, alpha)};
    torus_scales = torus_scales && act(t, c) == (alpha * alpha) * c;
  }
  const auto torus_weight = weight_of(c, Torus{{0, 2, 0, 1}, 0});
  const int stabilizer_dim = projective_stabilizer_dim(c);
  w["swap_fixes_C"] = swap_fixes;
  w["torus_weight_on_C"] = torus_weight ? Json(*torus_weight) : Json(nullptr);
  w["torus_scales_C"] = torus_scales;
  w["projective_stabilizer_dim"] = stabilizer_dim;
  ok = ok && swap_fixes && torus_scales && torus_weight == 2 && stabilizer_dim == 1;

  Outcome out;
  out.witnesses = std::move(w);
  out.status = pass_if(ok);
  return out;
}

Outcome pencil_18(std::uint64_t seed, const Fixtures& fixtures) {
  Sampler s(seed);
  const BiForm& h = fixtures.pencil_18;
  const BiForm& h2 = fixtures.pencil_14;
  const BiForm t = bitransvectant(h, h2, 1, 2);
  const std::size_t target = biform_basis(0, 8).size();
  const QMat first = transvectant_matrix(h, 1, 2, 1, 4);
  const QMat second = transvectant_matrix(h2, 1, 2, 1, 8, FixedSlot::Second);
  const std::size_t rank_first = rank(first);
  const std::size_t rank_second = rank(second);
  const Subspace kernel = kernel_basis(first);
  const bool kernel_is_h2 = kernel == Subspace::span(10, {h2.coefficients()});

  Json generic = Json::array();
  bool generic_ok = true;
  for (int k = 0; k < 5; ++k) {
    const BiForm random = s.biform(1, 4);
    const std::size_t dim = kernel_basis(transvectant_matrix(random, 1, 2, 1, 8, FixedSlot::Second)).dim();
    generic.push_back(dim);
    generic_ok = generic_ok && dim == 9;
  }

  Outcome out;
  out.witnesses = {{"T", str(t)},
                   {"rank_first", rank_first},
                   {"rank_first_of", target},
                   {"rank_second", rank_second},
                   {"rank_second_of", target},
                   {"kernel_is_H_prime", kernel_is_h2},
                   {"generic_fiber_ranks", generic}};
  out.status = pass_if(t.is_zero() && rank_first == target && rank_second == target && target == 9 &&
                       kernel_is_h2 && generic_ok);
  return out;
}

Outcome plane_curve_slices(std::uint64_t, const Fixtures&) {
  bool ok = true;
  Json w;
  const std::vector<G3Element> s3 = symmetric_group();
  const std::vector<G3Element> diagonal{G3Element::diagonal(2, 3, 5), G3Element::diagonal(-1, 7, Rat(1, 2))};

  // Cubics singular at [0, 1, 0].
  {
    const std::vector<ProjectivePoint> p{{0, 1, 0}};
    const Subspace cubics = singular_system(p, 3);
    const std::vector<std::vector<std::string>> summands{
        {"X*Y*Z"}, {"X^2*Z", "Z^2*X"}, {"X^2*Y", "Y*Z^2"}, {"X^3", "Z^3"}};
    std::vector<std::string> all;
    for (const auto& part : summands) all.insert(all.end(), part.begin(), part.end());
    const bool matches = cubics == span_of(all, 3);
    std::vector<G3Element> generators{G3Element::permutation({2, 1, 0})};
    for (const Rat& alpha : {Rat(2), Rat(-3)}) generators.push_back(G3Element::diagonal(1 / alpha, 1, alpha));
    const TernaryForm conic = TernaryForm::parse("X*Z - Y^2");
    bool invariant = true;
    bool preserves_conic = true;
    for (const auto& g : generators) {
      for (const auto& part : summands) invariant = invariant && subspace_invariant(span_of(part, 3), 3, g);
      const TernaryForm moved = act_ternary(g, conic);
      preserves_conic = preserves_conic && span_of_forms({moved, conic}, 2).dim() == 1;
    }
    w["cubic"] = {{"dim", cubics.dim()},
                  {"matches_list", matches},
                  {"summands_invariant", invariant},
                  {"generators_preserve_conic", preserves_conic}};
    ok = ok && cubics.dim() == 7 && matches && invariant && preserves_conic;

    const Subspace conics = singular_system(p, 2);
    const bool conic_matches = conics == span_of({"X^2", "X*Z", "Z^2"}, 2);
    w["conic"] = {{"dim", conics.dim()}, {"matches_list", conic_matches}};
    ok = ok && conics.dim() == 3 && conic_matches;
  }

  // All conics, split into squares and mixed products.
  {
    const std::vector<std::vector<std::string>> summands{{"X^2", "Y^2", "Z^2"}, {"X*Y", "Y*Z", "Z*X"}};
    bool invariant = true;
    for (const auto& part : summands) {
      for (const auto& g : s3) invariant = invariant && subspace_invariant(span_of(part, 2), 2, g);
      for (const auto& g : diagonal) invariant = invariant && subspace_invariant(span_of(part, 2), 2, g);
    }
    const bool whole = sum(span_of(summands[0], 2), span_of(summands[1], 2)) == Subspace::full(6);
    w["conics"] = {{"direct_sum_is_everything", whole}, {"summands_invariant", invariant}};
    ok = ok && whole && invariant;
  }

  // Quartics singular at the three coordinate points.
  {
    const std::vector<ProjectivePoint> points{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    const Subspace quartics = singular_system(points, 4);
    const std::vector<std::vector<std::string>> summands{{"X^2*Y^2", "Y^2*Z^2", "Z^2*X^2"},
                                                         {"X^2*Y*Z", "Y^2*Z*X", "Z^2*X*Y"}};
    const bool matches = quartics == sum(span_of(summands[0], 4), span_of(summands[1], 4));
    bool invariant = true;
    for (const auto& part : summands) {
      for (const auto& g : s3) invariant = invariant && subspace_invariant(span_of(part, 4), 4, g);
      for (const auto& g : diagonal) invariant = invariant && subspace_invariant(span_of(part, 4), 4, g);
    }
    w["quartic"] = {{"dim", quartics.dim()}, {"matches_list", matches}, {"summands_invariant", invariant}};
    ok = ok && quartics.dim() == 6 && matches && invariant;
  }

  Outcome out;
  out.witnesses = std::move(w);
  out.status = pass_if(ok);
  return out;
}

Outcome dimension_bookkeeping(std::uint64_t, const Fixtures&) {
  const int group_dim = static_cast<int>(sl2_basis().size());
  int identities = 0;
  int failures = 0;
  Json rows = Json::array();
  for (int a = 2; a <= 10; ++a) {
    for (int b = a + 1; b <= 10; ++b) {
      if (a * b % 2 != 0) continue;
      const int dim_v = static_cast<int>(binary_basis(a).size());
      const int dim_w = static_cast<int>(binary_basis(b).size());
      const int lhs = static_cast<int>(biform_basis(a, b).size()) - 1 - 2 * group_dim;
      const int quotient_w = dim_w - 1 - group_dim;
      int n_at_full = 0;
      for (int a2 = 1; a2 <= a; ++a2) {
        const int n = (a + 1) * (a - a2) + 1 + a * (b - a);
        const int quotient_v = dim_v * a2 - 1 - group_dim;
        ++identities;
        if (lhs != n + quotient_v + quotient_w) ++failures;
        if (a2 == a) n_at_full = n;
      }
      const int d = dim_v * (a + 1) - 1 - group_dim;
      const int m = d - a + a * (b - a);
      ++identities;
      if (d != a * a + 2 * a - 3 || d < a || m != a * (b + 1) - 3 || lhs != m + quotient_w) ++failures;
      rows.push_back({{"a", a}, {"b", b}, {"N", n_at_full}, {"d", d}, {"M", m}, {"quotient_dim", lhs}});
    }
  }
  Outcome out;
  out.witnesses = {{"identities", identities}, {"failures", failures}, {"grid", rows}};
  out.status = pass_if(failures == 0);
  return out;
}

}  // namespace biforms::checks
