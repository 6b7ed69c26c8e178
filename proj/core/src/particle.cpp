#include "partic/particle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "partic/normal_form.hpp"

namespace partic {

namespace {

// Position reached by a particle that a_i moves; N-1 feeds the deposit.
int next_position(Rank rank, int i) { return i == rank.generators() ? 0 : i + 1; }

void require_generator(Rank rank, int i) {
  if (i < 1 || i > rank.generators()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range [1, " +
                            std::to_string(rank.generators()) + "]");
  }
}

// All count vectors of the given length summing to `total`, lexicographic.
void compositions(std::size_t length, int total, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == length) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    prefix.push_back(x);
    compositions(length, total - x, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Configuration::Configuration(Rank rank)
    : rank_(rank), counts_(static_cast<std::size_t>(rank.value()), 0) {}

Configuration::Configuration(Rank rank, std::vector<int> counts)
    : rank_(rank), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(rank.value())) {
    throw std::invalid_argument("configuration for N=" + std::to_string(rank.value()) + " needs " +
                                std::to_string(rank.value()) + " counts, got " +
                                std::to_string(counts_.size()));
  }
  if (std::any_of(counts_.begin(), counts_.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("particle counts must be nonnegative");
  }
}

std::size_t Configuration::index_of(int position) const {
  if (position < 0 || position > rank_.generators()) {
    throw std::out_of_range("position " + std::to_string(position) + " out of range");
  }
  return position == 0 ? counts_.size() - 1 : static_cast<std::size_t>(position - 1);
}

int Configuration::at(int position) const { return counts_[index_of(position)]; }

int Configuration::particles() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

Configuration Configuration::with(int position) const {
  Configuration out = *this;
  ++out.counts_[index_of(position)];
  return out;
}

Configuration Configuration::without(int position) const {
  Configuration out = *this;
  auto& slot = out.counts_[index_of(position)];
  if (slot == 0) {
    throw std::domain_error("no particle at position " + std::to_string(position));
  }
  --slot;
  return out;
}

bool Configuration::dominates_on_line(const Configuration& other) const {
  for (int p = 1; p <= rank_.generators(); ++p) {
    if (at(p) < other.at(p)) {
      return false;
    }
  }
  return true;
}

std::vector<Configuration> configurations_with(Rank rank, int particles) {
  std::vector<std::vector<int>> vectors;
  std::vector<int> prefix;
  compositions(static_cast<std::size_t>(rank.value()), particles, prefix, vectors);
  std::vector<Configuration> out;
  out.reserve(vectors.size());
  for (auto& v : vectors) {
    out.emplace_back(rank, std::move(v));
  }
  return out;
}

std::vector<Configuration> configurations_bounded(Rank rank, int max_particles, int max_deposit) {
  std::vector<Configuration> out;
  for (int p = 0; p <= max_particles; ++p) {
    std::vector<std::vector<int>> line;
    std::vector<int> prefix;
    compositions(static_cast<std::size_t>(rank.generators()), p, prefix, line);
    for (int dep = 0; dep <= max_deposit; ++dep) {
      for (auto counts : line) {
        counts.push_back(dep);
        out.emplace_back(rank, std::move(counts));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ActionResult act_gen(int i, const Configuration& c) {
  require_generator(c.rank(), i);
  if (c.at(i) == 0) {
    return std::nullopt;
  }
  return c.without(i).with(next_position(c.rank(), i));
}

ActionResult act_word(const Word& w, const Configuration& c) {
  if (w.rank() != c.rank()) {
    throw std::invalid_argument("rank mismatch between word and configuration");
  }
  ActionResult current = c;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend() && current; ++it) {
    current = act_gen(*it, *current);
  }
  return current;
}

ModuleElement ModuleElement::basis(const Configuration& c, Coefficient coeff) {
  ModuleElement v(c.rank());
  v.add_term(c, coeff);
  return v;
}

void ModuleElement::add_term(const Configuration& c, const Coefficient& coeff) {
  if (c.rank() != rank_) {
    throw std::invalid_argument("rank mismatch in module element");
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

ModuleElement act_element(const AlgebraElement& e, const ModuleElement& v) {
  if (e.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch between element and module element");
  }
  ModuleElement out(v.rank());
  for (const auto& [m, cm] : e.terms()) {
    const Word w = nm_to_word(m);
    for (const auto& [c, cc] : v.terms()) {
      if (auto image = act_word(w, c)) {
        out.add_term(*image, cm * cc);
      }
    }
  }
  return out;
}

Configuration min_input(const NormalMonomial& m) {
  std::vector<int> counts(m.k_values().begin(), m.k_values().end());
  counts.push_back(0);
  return Configuration(m.rank(), std::move(counts));
}

Configuration output_of(const NormalMonomial& m) {
  const int top = m.rank().generators();
  std::vector<int> counts;
  counts.push_back(0);
  for (int p = 2; p <= top; ++p) {
    counts.push_back(m.k(p - 1) + m.d(p - 1) - m.d(p));
  }
  counts.push_back(m.k(top) + m.d(top));
  return Configuration(m.rank(), std::move(counts));
}

IoLabel io_label(const NormalMonomial& m) { return {output_of(m), min_input(m)}; }

NormalMonomial monomial_from_io(const IoLabel& label) {
  const Rank rank = label.out.rank();
  if (label.in.rank() != rank) {
    throw std::invalid_argument("label configurations have different ranks");
  }
  if (label.in.deposit() != 0) {
    throw std::invalid_argument("minimal input configuration must have an empty deposit");
  }
  if (label.out.at(1) != 0) {
    throw std::invalid_argument("output configuration must have no particle at position 1");
  }
  if (label.in.particles() != label.out.particles()) {
    throw std::invalid_argument("input and output particle counts differ");
  }
  const int top = rank.generators();
  std::vector<int> k;
  for (int p = 1; p <= top; ++p) {
    k.push_back(label.in.at(p));
  }
  std::vector<int> d;
  int prev_d = 0;
  for (int t = 2; t <= top; ++t) {
    const int dt = k[static_cast<std::size_t>(t - 2)] + prev_d - label.out.at(t);
    if (dt < 0) {
      throw std::invalid_argument("label is not realized by any basis monomial");
    }
    d.push_back(dt);
    prev_d = dt;
  }
  // The deposit count is implied by the particle total; recheck for clarity.
  if (label.out.deposit() != k.back() + prev_d) {
    throw std::invalid_argument("label deposit does not match");
  }
  return NormalMonomial(rank, std::move(d), std::move(k));
}

IoLabel label_mul(const IoLabel& label, int i, Side side) {
  const Rank rank = label.out.rank();
  require_generator(rank, i);
  const int next = next_position(rank, i);
  if (side == Side::left) {
    if (label.out.at(i) > 0) {
      return {label.out.without(i).with(next), label.in};
    }
    return {label.out.with(next), label.in.with(i)};
  }
  if (label.in.at(next) > 0) {
    return {label.out, label.in.without(next).with(i)};
  }
  return {label.out.with(next), label.in.with(i)};
}

bool faithfulness_check(Rank rank, int max_len) {
  std::set<IoLabel> seen;
  for (const auto& degree : degrees_up_to(rank, max_len)) {
    for (const auto& m : enumerate_basis(degree)) {
      const Word w = nm_to_word(m);
      const Configuration in = min_input(m);
      const auto out = act_word(w, in);
      if (!out) {
        return false;
      }
      for (int p = 1; p <= rank.generators(); ++p) {
        if (in.at(p) > 0 && act_word(w, in.without(p))) {
          return false;
        }
      }
      if (!seen.insert(IoLabel{*out, in}).second) {
        return false;
      }
    }
  }
  return true;
}

std::string action_graph_dot(Rank rank, int particles) {
  auto node = [](const Configuration& c) { return "\"" + to_string(c) + "\""; };
  std::ostringstream os;
  os << "digraph action {\n";
  const auto configs = configurations_with(rank, particles);
  for (const auto& c : configs) {
    os << "  " << node(c) << ";\n";
  }
  for (const auto& c : configs) {
    for (int i = 1; i <= rank.generators(); ++i) {
      if (auto image = act_gen(i, c)) {
        os << "  " << node(c) << " -> " << node(*image) << " [label=\"a" << i << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

Configuration parse_configuration(Rank rank, std::string_view text) {
  return Configuration(rank, parse_int_list(text));
}

std::string to_string(const Configuration& c) { return join(c.counts(), ","); }

std::ostream& operator<<(std::ostream& os, const Configuration& c) {
  return os << "(" << to_string(c) << ")";
}

std::ostream& operator<<(std::ostream& os, const IoLabel& l) {
  return os << "a_{" << l.out << l.in << "}";
}

}  // namespace partic
