#include "partic/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace partic {

namespace {

void require_generator(Rank rank, int i) {
  if (i < 1 || i > rank.generators()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range [1, " +
                            std::to_string(rank.generators()) + "]");
  }
}

std::vector<int> copy_of(std::span<const int> values) { return {values.begin(), values.end()}; }

}  // namespace

NormalMonomial left_mul_gen(int i, const NormalMonomial& m) {
  require_generator(m.rank(), i);
  auto d = copy_of(m.d_values());
  auto k = copy_of(m.k_values());
  if (i == 1 || m.d(i) == m.d(i - 1) + m.k(i - 1)) {
    ++k[static_cast<std::size_t>(i - 1)];
  } else {
    ++d[static_cast<std::size_t>(i - 2)];
  }
  return NormalMonomial(m.rank(), std::move(d), std::move(k));
}

NormalMonomial right_mul_gen(const NormalMonomial& m, int i) {
  require_generator(m.rank(), i);
  auto d = copy_of(m.d_values());
  auto k = copy_of(m.k_values());
  const auto idx = static_cast<std::size_t>(i - 1);
  if (i <= m.rank().generators() - 1 && m.k(i + 1) >= 1) {
    ++d[idx];  // d_{i+1} lives at d[i-1]
    ++k[idx];
    --k[idx + 1];
  } else {
    ++k[idx];
  }
  return NormalMonomial(m.rank(), std::move(d), std::move(k));
}

NormalMonomial normalize(const Word& w) {
  NormalMonomial m(w.rank());
  for (int a : w.letters()) {
    m = right_mul_gen(m, a);
  }
  return m;
}

NormalMonomial normalize_by_left_fold(const Word& w) {
  NormalMonomial m(w.rank());
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    m = left_mul_gen(*it, m);
  }
  return m;
}

NormalMonomial nm_product(const NormalMonomial& a, const NormalMonomial& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch in monomial product");
  }
  NormalMonomial m = a;
  const Word tail = nm_to_word(b);
  for (int letter : tail.letters()) {
    m = right_mul_gen(m, letter);
  }
  return m;
}

AlgebraElement element_product(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch in element product");
  }
  AlgebraElement out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term(nm_product(ma, mb), ca * cb);
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return element_product(a, b);
}

std::vector<NormalMonomial> enumerate_basis(const MultiDegree& degree) {
  const Rank rank = degree.rank();
  const int top = rank.generators();
  // bounds[j] is the largest admissible d_{j+2}
  std::vector<int> bounds;
  for (int i = 2; i <= top; ++i) {
    bounds.push_back(std::min(degree[i], degree[i - 1]));
  }
  std::vector<NormalMonomial> out;
  std::vector<int> d(bounds.size(), 0);
  while (true) {
    std::vector<int> k(static_cast<std::size_t>(top));
    k[0] = degree[1];
    for (int i = 2; i <= top; ++i) {
      k[static_cast<std::size_t>(i - 1)] = degree[i] - d[static_cast<std::size_t>(i - 2)];
    }
    out.emplace_back(rank, d, std::move(k));

    std::size_t pos = d.size();
    while (pos > 0) {
      --pos;
      if (d[pos] < bounds[pos]) {
        ++d[pos];
        break;
      }
      d[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
    if (d.empty()) {
      return out;
    }
  }
}

}  // namespace partic
