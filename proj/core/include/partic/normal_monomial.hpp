#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "partic/word.hpp"

namespace partic {

/// A basis monomial
///
///     a_{N-1}^{d_{N-1}} ... a_2^{d_2} a_1^{k_1} a_2^{k_2} ... a_{N-1}^{k_{N-1}}
///
/// subject to d_2 <= k_1 and d_i <= d_{i-1} + k_{i-1} for 3 <= i <= N-1.
/// There is no d_1 slot; d(1) reads as 0 so that the bound on d_i has the
/// same shape for every i >= 2.
///
/// Ordering is lexicographic on (d_2, ..., d_{N-1}, k_1, ..., k_{N-1}).
class NormalMonomial {
 public:
  // The unit monomial (all exponents zero).
  explicit NormalMonomial(Rank rank);

  // `d` lists d_2 ... d_{N-1}, `k` lists k_1 ... k_{N-1}. Throws
  // std::invalid_argument on wrong sizes, negative entries or a violated bound.
  NormalMonomial(Rank rank, std::vector<int> d, std::vector<int> k);

  [[nodiscard]] static bool satisfies_bounds(std::span<const int> d, std::span<const int> k);

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  // d(1) == 0 by convention.
  [[nodiscard]] int d(int i) const;
  [[nodiscard]] int k(int i) const;
  [[nodiscard]] std::span<const int> d_values() const noexcept { return d_; }
  [[nodiscard]] std::span<const int> k_values() const noexcept { return k_; }

  [[nodiscard]] int length() const noexcept;
  [[nodiscard]] MultiDegree degree() const;
  [[nodiscard]] bool is_unit() const noexcept { return length() == 0; }

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
  friend std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b);

 private:
  Rank rank_;
  std::vector<int> d_;  // d_2 ... d_{N-1}
  std::vector<int> k_;  // k_1 ... k_{N-1}
};

// Expansion a_{N-1}^{d_{N-1}} ... a_2^{d_2} a_1^{k_1} ... a_{N-1}^{k_{N-1}}.
[[nodiscard]] Word nm_to_word(const NormalMonomial& m);

[[nodiscard]] std::string to_string(const NormalMonomial& m);
// Product of powers, e.g. "a5 a2^2 a3 a4^2"; "1" for the unit.
[[nodiscard]] std::string to_power_string(const NormalMonomial& m);
std::ostream& operator<<(std::ostream& os, const NormalMonomial& m);

}  // namespace partic
