#include "partic/algebra_element.hpp"

#include <stdexcept>

namespace partic {

namespace {

void require_same_rank(Rank a, Rank b) {
  if (a != b) {
    throw std::invalid_argument("rank mismatch: N=" + std::to_string(a.value()) + " vs N=" +
                                std::to_string(b.value()));
  }
}

}  // namespace

std::string to_string(const Coefficient& c) { return c.str(); }

AlgebraElement AlgebraElement::unit(Rank rank) { return monomial(NormalMonomial(rank)); }

AlgebraElement AlgebraElement::monomial(const NormalMonomial& m, Coefficient c) {
  AlgebraElement e(m.rank());
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::generator(Rank rank, int i) {
  if (i < 1 || i > rank.generators()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  }
  std::vector<int> k(static_cast<std::size_t>(rank.generators()), 0);
  k[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(NormalMonomial(rank, std::vector<int>(static_cast<std::size_t>(rank.value() - 2), 0),
                                 std::move(k)));
}

Coefficient AlgebraElement::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void AlgebraElement::add_term(const NormalMonomial& m, const Coefficient& c) {
  require_same_rank(rank_, m.rank());
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

AlgebraElement elem_add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out += b;
  return out;
}

AlgebraElement elem_scale(const Coefficient& c, const AlgebraElement& e) {
  AlgebraElement out(e.rank());
  if (c == 0) {
    return out;
  }
  for (const auto& [m, coeff] : e.terms()) {
    out.add_term(m, c * coeff);
  }
  return out;
}

bool elem_eq(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_rank(a.rank(), b.rank());
  return a == b;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return elem_add(a, b); }

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  out -= b;
  return out;
}

AlgebraElement operator*(const Coefficient& c, const AlgebraElement& e) { return elem_scale(c, e); }

std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += to_string(c) + "*" + to_power_string(m);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& e) { return os << to_string(e); }

}  // namespace partic
