#include "partic/normal_monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partic {

NormalMonomial::NormalMonomial(Rank rank)
    : rank_(rank),
      d_(static_cast<std::size_t>(rank.value() - 2), 0),
      k_(static_cast<std::size_t>(rank.generators()), 0) {}

NormalMonomial::NormalMonomial(Rank rank, std::vector<int> d, std::vector<int> k)
    : rank_(rank), d_(std::move(d)), k_(std::move(k)) {
  if (d_.size() != static_cast<std::size_t>(rank.value() - 2) ||
      k_.size() != static_cast<std::size_t>(rank.generators())) {
    throw std::invalid_argument("normal monomial for N=" + std::to_string(rank.value()) +
                                " needs " + std::to_string(rank.value() - 2) + " d entries and " +
                                std::to_string(rank.generators()) + " k entries");
  }
  if (!satisfies_bounds(d_, k_)) {
    throw std::invalid_argument("exponents d=[" + join(d_, ",") + "] k=[" + join(k_, ",") +
                                "] violate the normal form bounds");
  }
}

bool NormalMonomial::satisfies_bounds(std::span<const int> d, std::span<const int> k) {
  if (d.size() + 1 != k.size()) {
    return false;
  }
  const auto negative = [](int x) { return x < 0; };
  if (std::any_of(d.begin(), d.end(), negative) || std::any_of(k.begin(), k.end(), negative)) {
    return false;
  }
  // d[j] is d_{j+2}; its bound is d_{j+1} + k_{j+1} with d_1 = 0.
  for (std::size_t j = 0; j < d.size(); ++j) {
    const int prev_d = j == 0 ? 0 : d[j - 1];
    if (d[j] > prev_d + k[j]) {
      return false;
    }
  }
  return true;
}

int NormalMonomial::d(int i) const {
  if (i == 1) {
    return 0;
  }
  return d_.at(static_cast<std::size_t>(i - 2));
}

int NormalMonomial::k(int i) const { return k_.at(static_cast<std::size_t>(i - 1)); }

int NormalMonomial::length() const noexcept {
  return std::accumulate(d_.begin(), d_.end(), 0) + std::accumulate(k_.begin(), k_.end(), 0);
}

MultiDegree NormalMonomial::degree() const {
  std::vector<int> counts = k_;
  for (std::size_t j = 0; j < d_.size(); ++j) {
    counts[j + 1] += d_[j];
  }
  return MultiDegree(rank_, std::move(counts));
}

std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) {
    return c;
  }
  if (auto c = a.d_ <=> b.d_; c != 0) {
    return c;
  }
  return a.k_ <=> b.k_;
}

Word nm_to_word(const NormalMonomial& m) {
  const int top = m.rank().generators();
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m.length()));
  for (int i = top; i >= 2; --i) {
    letters.insert(letters.end(), static_cast<std::size_t>(m.d(i)), i);
  }
  for (int i = 1; i <= top; ++i) {
    letters.insert(letters.end(), static_cast<std::size_t>(m.k(i)), i);
  }
  return Word(m.rank(), std::move(letters));
}

std::string to_string(const NormalMonomial& m) {
  return "d=[" + join(m.d_values(), ",") + "] k=[" + join(m.k_values(), ",") + "]";
}

std::string to_power_string(const NormalMonomial& m) {
  std::string out;
  auto emit = [&out](int gen, int exp) {
    if (exp == 0) {
      return;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += "a" + std::to_string(gen);
    if (exp > 1) {
      out += "^" + std::to_string(exp);
    }
  };
  for (int i = m.rank().generators(); i >= 2; --i) {
    emit(i, m.d(i));
  }
  for (int i = 1; i <= m.rank().generators(); ++i) {
    emit(i, m.k(i));
  }
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const NormalMonomial& m) { return os << to_string(m); }

}  // namespace partic
