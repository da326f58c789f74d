#include <doctest.h>

#include "biforms/actions.hpp"
#include "biforms/binary_ops.hpp"
#include "biforms/curves.hpp"
#include "biforms/sampling.hpp"

using namespace biforms;

namespace {

BinaryForm bf(std::string_view text) { return BinaryForm::parse(text); }
BiForm bif(std::string_view text) { return BiForm::parse(text); }
TernaryForm tf(std::string_view text) { return TernaryForm::parse(text); }

BiForm monomial(int a, int b) {
  return {a, b, MPoly::monomial(Ring::Bi, {static_cast<std::uint16_t>(a), 0, static_cast<std::uint16_t>(b), 0})};
}

// prod_i (X - r_i Y)
BinaryForm from_roots(const std::vector<Rat>& roots) {
  BinaryForm out = BinaryForm::parse("1");
  for (const Rat& r : roots) {
    out = out * BinaryForm::from_coefficients(1, std::vector<Rat>{1, -r});
  }
  return out;
}

// F(t, 1; X2, Y2) as a binary form in [X, Y] = [X2, Y2].
BinaryForm fiber(const BiForm& f, const Rat& t) {
  const std::vector<Rat> at{t, 1};
  const CurveMap cm = phi_components(f);
  std::vector<Rat> coeffs(f.b() + 1);
  // components[j] multiplies X2^j Y2^(b-j); coefficient(i) is X^i Y^(d-i).
  for (int j = 0; j <= f.b(); ++j) coeffs[f.b() - j] = evaluate(cm.components[j].poly(), at);
  return BinaryForm::from_coefficients(f.b(), coeffs);
}

Rat partial_resultant(const BinaryForm& p) {
  return sylvester_resultant(BinaryForm(p.degree() - 1, differentiate(p.poly(), "X")),
                             BinaryForm(p.degree() - 1, differentiate(p.poly(), "Y")));
}

Subspace monomial_span(const std::vector<std::string_view>& texts, int d) {
  std::vector<TernaryForm> forms;
  for (auto t : texts) forms.push_back(tf(t));
  return span_of_forms(forms, d);
}

}  // namespace

TEST_CASE("phi_components") {
  const CurveMap cm = phi_components(bif("X1*Y2^2 + Y1*X2^2"));
  REQUIRE(cm.components.size() == 3);
  CHECK(cm.components[0] == bf("X"));
  CHECK(cm.components[1].is_zero());
  CHECK(cm.components[2] == bf("Y"));

  const CurveMap mono = phi_components(monomial(3, 4));
  int nonzero = 0;
  for (const auto& c : mono.components) nonzero += c.is_zero() ? 0 : 1;
  CHECK(nonzero == 1);
  CHECK_THROWS_AS(phi_components(BiForm::zero(1, 2)), std::invalid_argument);

  Sampler s(127);
  for (int trial = 0; trial < 50; ++trial) {
    const BiForm f = s.biform(s.integer(0, 4), s.integer(0, 6));
    if (f.is_zero()) continue;
    CHECK(reassemble(phi_components(f)) == f);
  }
}

TEST_CASE("span_dim and image_subspace") {
  Sampler s(131);
  const BiForm f25 = s.biform(2, 5);
  CHECK(span_dim(phi_components(f25)) == 2);
  CHECK(image_subspace(f25).dim() == 3);
  CHECK(image_subspace(f25).ambient_dim() == 6);
  CHECK(span_dim(phi_components(s.biform(3, 7))) == 3);
  CHECK(span_dim(phi_components(monomial(2, 4))) == 0);
  CHECK(image_subspace(monomial(2, 4)) == Subspace::span(5, {{1, 0, 0, 0, 0}}));
  // proportional components
  const BiForm rank_one = BiForm::tensor(s.binary_form(3), bf("X^2 - 7*X*Y"));
  CHECK(image_subspace(rank_one).dim() == 1);
  CHECK_THROWS_AS(image_subspace(BiForm::zero(2, 3)), std::invalid_argument);

  for (int trial = 0; trial < 50; ++trial) {
    const int a = s.integer(0, 4);
    const int b = s.integer(0, 6);
    const BiForm f = s.biform(a, b);
    if (f.is_zero()) continue;
    CHECK(span_dim(phi_components(f)) <= std::min(a, b));
    CHECK(image_subspace(f).dim() == static_cast<std::size_t>(span_dim(phi_components(f)) + 1));
  }
}

TEST_CASE("image_subspace is equivariant") {
  Sampler s(137);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = s.integer(1, 3);
    const int b = s.integer(a, 6);
    const BiForm f = s.biform(a, b);
    const GroupPair g{s.gl2_element(), s.gl2_element()};
    const QMat moved = action_matrix(g.second(), b) * image_subspace(f).basis().transpose();
    CHECK(image_subspace(act(g, f)) == column_space(moved));
  }
}

TEST_CASE("hyperplane_degree") {
  Sampler s(139);
  CHECK(hyperplane_degree(phi_components(s.biform(2, 3)), 1) == 2);
  CHECK(hyperplane_degree(phi_components(s.biform(1, 6)), 1) == 1);
  CHECK(hyperplane_degree(phi_components(monomial(3, 4)), 1) == 0);
  CHECK(hyperplane_degree(phi_components(BiForm::tensor(bf("X^2*Y"), bf("X^4 - Y^4"))), 5) == 0);
  // common factor in the components lowers the degree
  const BiForm factored = BiForm::tensor(bf("X + Y"), BinaryForm::parse("1")) * s.biform(1, 4);
  CHECK(hyperplane_degree(phi_components(factored), 3) == 1);
  CHECK_THROWS_AS(hyperplane_degree(CurveMap{1, 1, {BinaryForm::zero(1), BinaryForm::zero(1)}}, 1),
                  std::invalid_argument);

  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}}) {
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int degree = hyperplane_degree(phi_components(s.biform(a, b)), trial);
      CHECK(degree <= a);
      hits += degree == a ? 1 : 0;
    }
    CHECK(hits >= 95);
  }
}

TEST_CASE("sylvester_resultant") {
  CHECK(sylvester_resultant(bf("X"), bf("Y")) == 1);
  CHECK(sylvester_resultant(bf("X^2 - Y^2"), bf("X - Y")) == 0);
  const BinaryForm p = bf("X^3 - 2*X*Y^2 + 5*Y^3");
  CHECK(sylvester_resultant(p, p) == 0);
  // common root at infinity
  CHECK(sylvester_resultant(bf("X*Y"), bf("Y^2 + X*Y")) == 0);
  CHECK_THROWS_AS(sylvester_resultant(BinaryForm::parse("3"), bf("X")), std::invalid_argument);

  // Res(prod (X - r_i Y), prod (X - s_j Y)) = prod (r_i - s_j)
  Sampler s(149);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> rs(s.integer(1, 4)), ss(s.integer(1, 4));
    for (auto* roots : {&rs, &ss}) {
      for (auto& r : *roots) {
        r = Rat(s.integer(-6, 6), s.integer(1, 3));
        r.canonicalize();
      }
    }
    Rat expected = 1;
    for (const auto& r : rs) {
      for (const auto& t : ss) expected *= r - t;
    }
    CHECK(sylvester_resultant(from_roots(rs), from_roots(ss)) == expected);
    const Rat c = s.integer(1, 5);
    // homogeneity of degree e in the first argument
    Rat scaled = expected;
    for (std::size_t k = 0; k < ss.size(); ++k) scaled *= c;
    CHECK(sylvester_resultant(c * from_roots(rs), from_roots(ss)) == scaled);
  }
}

TEST_CASE("branch_form") {
  Sampler s(151);
  const BranchForm b23 = branch_form(s.biform(2, 3));
  CHECK_FALSE(b23.degenerate);
  CHECK(b23.form.degree() == 8);
  CHECK(is_squarefree(b23.form));
  const BranchForm b14 = branch_form(s.biform(1, 4));
  CHECK(b14.form.degree() == 6);
  CHECK(is_squarefree(b14.form));
  CHECK(branch_form(monomial(2, 3)).degenerate);

  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}) {
    const BiForm f = s.biform(a, b);
    const BranchForm br = branch_form(f);
    const int genus = (a - 1) * (b - 1);
    CHECK_FALSE(br.degenerate);
    CHECK(br.form.degree() == 2 * a * (b - 1));
    CHECK(br.form.degree() == 2 * genus - 2 + 2 * b);
    CHECK(is_squarefree(br.form));
    // values off the interpolation nodes match the fiber resultant
    for (int k = 0; k < 4; ++k) {
      const int num = s.integer(-20, 20);
      const Rat t = Rat(num) / s.integer(1, 7);
      const std::vector<Rat> at{t, 1};
      CHECK(evaluate(br.form.poly(), at) == partial_resultant(fiber(f, t)));
    }
    // Y1 = 0 fiber: coefficient of X1^D
    const std::vector<Rat> infinity{1, 0};
    const CurveMap cm = phi_components(f);
    std::vector<Rat> top(b + 1);
    for (int j = 0; j <= b; ++j) top[b - j] = cm.components[j].coefficient(a);
    CHECK(evaluate(br.form.poly(), infinity) == partial_resultant(BinaryForm::from_coefficients(b, top)));
  }

  // A fiber with a double root forces a branch point there.
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryForm square = bf("X - 2*Y") * bf("X - 2*Y") * s.binary_form(2);
    const BiForm f = BiForm::tensor(bf("Y"), square) + BiForm::tensor(bf("X"), s.binary_form(4));
    const BranchForm br = branch_form(f);
    REQUIRE_FALSE(br.degenerate);
    CHECK(br.form.coefficient(0) == 0);
  }
}

TEST_CASE("singular_system") {
  const std::vector<ProjectivePoint> p{{0, 1, 0}};
  const Subspace cubics = singular_system(p, 3);
  CHECK(cubics.dim() == 7);
  CHECK(cubics == monomial_span({"X*Y*Z", "X^2*Z", "Z^2*X", "X^2*Y", "Y*Z^2", "X^3", "Z^3"}, 3));
  const Subspace conics = singular_system(p, 2);
  CHECK(conics == monomial_span({"X^2", "X*Z", "Z^2"}, 2));

  const std::vector<ProjectivePoint> three{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const Subspace quartics = singular_system(three, 4);
  CHECK(quartics.dim() == 6);
  CHECK(quartics ==
        monomial_span({"X^2*Y^2", "Y^2*Z^2", "Z^2*X^2", "X^2*Y*Z", "Y^2*Z*X", "Z^2*X*Y"}, 4));

  const std::vector<ProjectivePoint> repeated{{{1, 2, 3}, {2, 4, 6}}};
  CHECK_THROWS_AS(singular_system(repeated, 3), std::invalid_argument);

  // scaling a point changes nothing
  const std::vector<ProjectivePoint> scaled{{0, Rat(-5, 3), 0}};
  CHECK(singular_system(scaled, 3) == cubics);

  // every form in the system really is singular at the point
  for (const TernaryForm& f : forms_of(quartics, 4)) {
    for (const auto& pt : three) {
      CHECK(evaluate(f.poly(), pt) == 0);
      for (const char* v : {"X", "Y", "Z"}) CHECK(evaluate(differentiate(f.poly(), v), pt) == 0);
    }
  }
}

TEST_CASE("singular systems are invariant under point permutations") {
  const std::vector<ProjectivePoint> three{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (int d = 2; d <= 5; ++d) {
    const Subspace system = singular_system(three, d);
    for (const auto& perm : perms) {
      std::vector<TernaryForm> moved;
      for (const TernaryForm& f : forms_of(system, d)) moved.push_back(act_ternary(G3Element::permutation(perm), f));
      CHECK(span_of_forms(moved, d) == system);
    }
  }

  // three non-coordinate points permuted by a matrix
  const std::vector<ProjectivePoint> pts{{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
  const Subspace system = singular_system(pts, 4);
  CHECK(system.dim() == 6);
  std::vector<TernaryForm> moved;
  for (const TernaryForm& f : forms_of(system, 4)) moved.push_back(act_ternary(G3Element::permutation({1, 2, 0}), f));
  CHECK(span_of_forms(moved, 4) == system);
}
