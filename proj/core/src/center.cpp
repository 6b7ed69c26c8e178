#include "partic/center.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "partic/normal_form.hpp"

namespace partic {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Coefficient> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data does not match its shape");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

std::vector<Coefficient> RationalMatrix::apply(const std::vector<Coefficient>& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("vector length does not match matrix columns");
  }
  std::vector<Coefficient> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

void RationalMatrix::stack(const RationalMatrix& other) {
  if (other.cols_ != cols_) {
    throw std::invalid_argument("cannot stack matrices with different column counts");
  }
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

std::vector<std::vector<Coefficient>> nullspace(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::size_t p = next_row;
    while (p < rows && m(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != next_row) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(m(p, j), m(next_row, j));
      }
    }
    const Coefficient inv = 1 / m(next_row, c);
    for (std::size_t j = c; j < cols; ++j) {
      m(next_row, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || m(r, c) == 0) {
        continue;
      }
      const Coefficient factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        m(r, j) -= factor * m(next_row, j);
      }
    }
    pivot_cols.push_back(c);
    ++next_row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) {
    is_pivot[c] = true;
  }
  std::vector<std::vector<Coefficient>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Coefficient> x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      x[pivot_cols[r]] = -m(r, free);
    }
    for (const auto& v : x) {
      if (v != 0) {
        const Coefficient lead = v;
        for (auto& entry : x) {
          entry /= lead;
        }
        break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

NormalMonomial central_candidate(Rank rank, int r) {
  if (r < 0) {
    throw std::invalid_argument("central candidate exponent must be nonnegative");
  }
  std::vector<int> d(static_cast<std::size_t>(rank.value() - 2), r);
  std::vector<int> k(static_cast<std::size_t>(rank.generators()), 0);
  k[0] = r;
  return NormalMonomial(rank, std::move(d), std::move(k));
}

bool commutes_with_generators(const AlgebraElement& e) {
  for (int i = 1; i <= e.rank().generators(); ++i) {
    const auto gen = AlgebraElement::generator(e.rank(), i);
    if (element_product(gen, e) != element_product(e, gen)) {
      return false;
    }
  }
  return true;
}

std::vector<AlgebraElement> center_basis_in_degree(const MultiDegree& degree) {
  const Rank rank = degree.rank();
  const auto columns = enumerate_basis(degree);
  RationalMatrix system(0, columns.size());
  for (int i = 1; i <= rank.generators(); ++i) {
    const auto targets = enumerate_basis(degree.plus_generator(i));
    std::map<NormalMonomial, std::size_t> row_of;
    for (std::size_t r = 0; r < targets.size(); ++r) {
      row_of.emplace(targets[r], r);
    }
    RationalMatrix block(targets.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      block(row_of.at(left_mul_gen(i, columns[c])), c) += 1;
      block(row_of.at(right_mul_gen(columns[c], i)), c) -= 1;
    }
    system.stack(block);
  }
  std::vector<AlgebraElement> out;
  for (const auto& x : nullspace(std::move(system))) {
    AlgebraElement z(rank);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      z.add_term(columns[c], x[c]);
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace partic
