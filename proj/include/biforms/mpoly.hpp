#ifndef BIFORMS_MPOLY_HPP
#define BIFORMS_MPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "biforms/rat.hpp"

namespace biforms {

// The three fixed variable sets used throughout the toolkit.
enum class Ring {
  Binary,   // [X, Y]
  Bi,       // [X1, Y1, X2, Y2]
  Ternary,  // [X, Y, Z]
};

std::size_t arity(Ring ring);
std::span<const std::string_view> variable_names(Ring ring);
// Index of `name` in the ring, or throws std::invalid_argument.
std::size_t variable_index(Ring ring, std::string_view name);

// Exponent vector; slots beyond the ring arity stay zero.
using Exponent = std::array<std::uint16_t, 4>;

int total_degree(const Exponent& e);

// Sparse polynomial over Q in one of the fixed rings. Terms are kept in
// descending lexicographic order of exponent vectors (X1 > Y1 > X2 > Y2,
// X > Y > Z) with no stored zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, std::greater<>>;

  explicit MPoly(Ring ring = Ring::Binary) : ring_(ring) {}
  MPoly(Ring ring, TermMap terms);

  static MPoly constant(Ring ring, const Rat& c);
  static MPoly monomial(Ring ring, const Exponent& e, const Rat& c = 1);
  static MPoly variable(Ring ring, std::size_t index);

  Ring ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const Exponent& e) const;

  // Homogeneity in the variable block [first, first + count).
  bool is_homogeneous_in(std::size_t first, std::size_t count, int degree) const;

  MPoly& add_term(const Exponent& e, const Rat& c);
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(MPoly lhs, const Rat& c) { return lhs *= c; }
  friend MPoly operator*(const Rat& c, MPoly rhs) { return rhs *= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& lhs, const MPoly& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_same_ring(const MPoly& other) const;

  Ring ring_;
  TermMap terms_;
};

// Exact product; throws std::invalid_argument on ring mismatch.
MPoly multiply(const MPoly& p, const MPoly& q);
MPoly operator*(const MPoly& p, const MPoly& q);

// k-th partial derivative in one variable.
MPoly differentiate(const MPoly& p, std::size_t var, unsigned order = 1);
MPoly differentiate(const MPoly& p, std::string_view var, unsigned order = 1);

// Mixed partial derivative: orders[v] times in variable v.
MPoly differentiate(const MPoly& p, const Exponent& orders);

// Throws std::invalid_argument when point.size() != arity.
Rat evaluate(const MPoly& p, std::span<const Rat> point);

MPoly power(const MPoly& p, unsigned k);

}  // namespace biforms

#endif  // BIFORMS_MPOLY_HPP
