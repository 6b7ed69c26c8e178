#pragma once

#include <vector>

#include "partic/algebra_element.hpp"
#include "partic/normal_monomial.hpp"
#include "partic/word.hpp"

namespace partic {

// a_i * m. With d_1 = 0: if i == 1 or d_i == d_{i-1} + k_{i-1} then k_i grows,
// otherwise d_i grows.
[[nodiscard]] NormalMonomial left_mul_gen(int i, const NormalMonomial& m);

// m * a_i. If i <= N-2 and k_{i+1} >= 1 the letter is absorbed as
// d_{i+1} += 1, k_i += 1, k_{i+1} -= 1; otherwise k_i grows.
[[nodiscard]] NormalMonomial right_mul_gen(const NormalMonomial& m, int i);

// Left-to-right fold of right_mul_gen from the unit.
[[nodiscard]] NormalMonomial normalize(const Word& w);

// Right-to-left fold of left_mul_gen from the unit. Must agree with normalize;
// kept as an independent cross-check.
[[nodiscard]] NormalMonomial normalize_by_left_fold(const Word& w);

[[nodiscard]] NormalMonomial nm_product(const NormalMonomial& a, const NormalMonomial& b);

[[nodiscard]] AlgebraElement element_product(const AlgebraElement& a, const AlgebraElement& b);
[[nodiscard]] AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

// The basis monomials of the given multidegree in lexicographic (d, k) order.
// Since d_{i-1} + k_{i-1} equals the degree in generator i-1, the admissible
// range of d_i is 0 ... min(degree_i, degree_{i-1}) independently for each i.
[[nodiscard]] std::vector<NormalMonomial> enumerate_basis(const MultiDegree& degree);

}  // namespace partic
