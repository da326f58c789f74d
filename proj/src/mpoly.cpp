#include "biforms/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace biforms {

namespace {

constexpr std::array<std::string_view, 2> kBinaryNames{"X", "Y"};
constexpr std::array<std::string_view, 4> kBiNames{"X1", "Y1", "X2", "Y2"};
constexpr std::array<std::string_view, 3> kTernaryNames{"X", "Y", "Z"};

}  // namespace

std::size_t arity(Ring ring) { return variable_names(ring).size(); }

std::span<const std::string_view> variable_names(Ring ring) {
  switch (ring) {
    case Ring::Binary:
      return kBinaryNames;
    case Ring::Bi:
      return kBiNames;
    case Ring::Ternary:
      return kTernaryNames;
  }
  throw std::logic_error("unknown ring");
}

std::size_t variable_index(Ring ring, std::string_view name) {
  const auto names = variable_names(ring);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' for this ring");
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MPoly::MPoly(Ring ring, TermMap terms) : ring_(ring), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& term) { return biforms::is_zero(term.second); });
  for (const auto& [e, c] : terms_) {
    for (std::size_t v = arity(ring_); v < e.size(); ++v) {
      if (e[v] != 0) throw std::invalid_argument("exponent vector longer than ring arity");
    }
  }
}

MPoly MPoly::constant(Ring ring, const Rat& c) { return monomial(ring, Exponent{}, c); }

MPoly MPoly::monomial(Ring ring, const Exponent& e, const Rat& c) {
  MPoly p(ring);
  p.add_term(e, c);
  return p;
}

MPoly MPoly::variable(Ring ring, std::size_t index) {
  if (index >= arity(ring)) throw std::invalid_argument("variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(ring, e);
}

Rat MPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool MPoly::is_homogeneous_in(std::size_t first, std::size_t count, int degree) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t v = first; v < first + count; ++v) d += e[v];
    if (d != degree) return false;
  }
  return true;
}

MPoly& MPoly::add_term(const Exponent& e, const Rat& c) {
  if (biforms::is_zero(c)) return *this;
  for (std::size_t v = arity(ring_); v < e.size(); ++v) {
    if (e[v] != 0) throw std::invalid_argument("exponent vector longer than ring arity");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (biforms::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

void MPoly::check_same_ring(const MPoly& other) const {
  if (ring_ != other.ring_) throw std::invalid_argument("polynomial ring mismatch");
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (biforms::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly result = *this;
  for (auto& term : result.terms_) term.second = -term.second;
  return result;
}

MPoly multiply(const MPoly& p, const MPoly& q) {
  if (p.ring() != q.ring()) throw std::invalid_argument("polynomial ring mismatch");
  MPoly result(p.ring());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      Exponent e;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ep[v] + eq[v]);
      result.add_term(e, cp * cq);
    }
  }
  return result;
}

MPoly operator*(const MPoly& p, const MPoly& q) { return multiply(p, q); }

MPoly differentiate(const MPoly& p, const Exponent& orders) {
  for (std::size_t v = arity(p.ring()); v < orders.size(); ++v) {
    if (orders[v] != 0) throw std::invalid_argument("derivative in a variable outside the ring");
  }
  MPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    Exponent reduced = e;
    Rat coeff = c;
    bool vanishes = false;
    for (std::size_t v = 0; v < e.size() && !vanishes; ++v) {
      if (orders[v] > e[v]) {
        vanishes = true;
      } else {
        coeff *= falling_factorial(e[v], orders[v]);
        reduced[v] = static_cast<std::uint16_t>(e[v] - orders[v]);
      }
    }
    // Distinct exponents stay distinct after a uniform shift.
    if (!vanishes) terms.emplace(reduced, coeff);
  }
  return MPoly(p.ring(), std::move(terms));
}

MPoly differentiate(const MPoly& p, std::size_t var, unsigned order) {
  if (var >= arity(p.ring())) throw std::invalid_argument("variable index out of range");
  Exponent orders{};
  orders[var] = static_cast<std::uint16_t>(order);
  return differentiate(p, orders);
}

MPoly differentiate(const MPoly& p, std::string_view var, unsigned order) {
  return differentiate(p, variable_index(p.ring(), var), order);
}

Rat evaluate(const MPoly& p, std::span<const Rat> point) {
  if (point.size() != arity(p.ring())) throw std::invalid_argument("evaluation point has wrong arity");
  Rat total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat term = c;
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

MPoly power(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.ring(), 1);
  for (unsigned i = 0; i < k; ++i) result = multiply(result, p);
  return result;
}

}  // namespace biforms
