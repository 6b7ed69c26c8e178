#pragma once

#include <map>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "partic/normal_monomial.hpp"

namespace partic {

// Exact rational, always in lowest terms with positive denominator.
using Coefficient = boost::multiprecision::cpp_rational;

[[nodiscard]] std::string to_string(const Coefficient& c);

// Finite linear combination of basis monomials. Zero coefficients are never
// stored, so equality is equality of the term maps.
class AlgebraElement {
 public:
  using Terms = std::map<NormalMonomial, Coefficient>;

  explicit AlgebraElement(Rank rank) : rank_(rank) {}

  [[nodiscard]] static AlgebraElement zero(Rank rank) { return AlgebraElement(rank); }
  [[nodiscard]] static AlgebraElement unit(Rank rank);
  [[nodiscard]] static AlgebraElement monomial(const NormalMonomial& m, Coefficient c = 1);
  // The generator a_i as an element.
  [[nodiscard]] static AlgebraElement generator(Rank rank, int i);

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Coefficient coefficient(const NormalMonomial& m) const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const NormalMonomial& m, const Coefficient& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Rank rank_;
  Terms terms_;
};

[[nodiscard]] AlgebraElement elem_add(const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement elem_scale(const Coefficient& c, const AlgebraElement& e);
[[nodiscard]] bool elem_eq(const AlgebraElement& a, const AlgebraElement& b);

[[nodiscard]] AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement operator*(const Coefficient& c, const AlgebraElement& e);

// Terms in ascending (d, k) order joined by " + ", e.g. "2*a2 a1 + -1*a1 a2".
[[nodiscard]] std::string to_string(const AlgebraElement& e);
std::ostream& operator<<(std::ostream& os, const AlgebraElement& e);

}  // namespace partic
