#pragma once

#include <cstddef>
#include <vector>

#include "partic/algebra_element.hpp"
#include "partic/normal_monomial.hpp"
#include "partic/word.hpp"

namespace partic {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Coefficient> row_major);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] Coefficient& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Coefficient& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::vector<Coefficient> apply(const std::vector<Coefficient>& x) const;

  // Appends the rows of `other`; column counts must agree.
  void stack(const RationalMatrix& other);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coefficient> data_;
};

// Basis of {x : M x = 0} by exact Gauss-Jordan elimination. Pivots are taken
// column by column, from the lowest-index row with a nonzero entry. One vector
// per free column, ordered by that column, each scaled so that its first
// nonzero coordinate is 1.
[[nodiscard]] std::vector<std::vector<Coefficient>> nullspace(RationalMatrix m);

// (a_{N-1} ... a_2 a_1)^r in normal form: every d_i = r, k_1 = r, other k = 0.
[[nodiscard]] NormalMonomial central_candidate(Rank rank, int r);

// a_i e == e a_i for every generator a_i.
[[nodiscard]] bool commutes_with_generators(const AlgebraElement& e);

// Basis of the homogeneous central elements of the given multidegree: the
// nullspace of the stacked commutator maps z -> a_i z - z a_i, whose columns
// are the basis monomials of `degree` and rows those of degree + e_i.
[[nodiscard]] std::vector<AlgebraElement> center_basis_in_degree(const MultiDegree& degree);

}  // namespace partic
