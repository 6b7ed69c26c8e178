#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partic/algebra_element.hpp"
#include "partic/normal_monomial.hpp"
#include "partic/word.hpp"

namespace partic {

// Bosonic particle configuration (k_1, ..., k_{N-1}, k_0): k_p particles at
// lattice position p, and k_0 particles in the deposit behind position N-1.
// Equivalently the monomial x_1^{k_1} ... x_{N-1}^{k_{N-1}} x_0^{k_0}.
class Configuration {
 public:
  explicit Configuration(Rank rank);
  // Counts in text order: positions 1 ... N-1, then the deposit.
  Configuration(Rank rank, std::vector<int> counts);

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  // Position 0 is the deposit.
  [[nodiscard]] int at(int position) const;
  [[nodiscard]] int deposit() const { return at(0); }
  [[nodiscard]] std::span<const int> counts() const noexcept { return counts_; }
  [[nodiscard]] int particles() const noexcept;

  // Copy with one particle added / removed at `position`. `without` throws
  // std::domain_error if the position is empty.
  [[nodiscard]] Configuration with(int position) const;
  [[nodiscard]] Configuration without(int position) const;

  // Componentwise >= on positions 1 ... N-1 (the deposit is ignored).
  [[nodiscard]] bool dominates_on_line(const Configuration& other) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  [[nodiscard]] std::size_t index_of(int position) const;

  Rank rank_;
  std::vector<int> counts_;
};

// Empty optional means the configuration was annihilated (sent to zero).
using ActionResult = std::optional<Configuration>;

// Every configuration with exactly `particles` particles, deposit included,
// in lexicographic order of the count vectors.
[[nodiscard]] std::vector<Configuration> configurations_with(Rank rank, int particles);

// Configurations with at most `max_particles` particles on positions
// 1 ... N-1 and at most `max_deposit` in the deposit.
[[nodiscard]] std::vector<Configuration> configurations_bounded(Rank rank, int max_particles,
                                                                int max_deposit);

// a_i moves one particle from position i to i+1 (position N-1 feeds the
// deposit), or annihilates if position i is empty.
[[nodiscard]] ActionResult act_gen(int i, const Configuration& c);

// Left action of the written monomial: the rightmost letter acts first, so
// [6,5,4] means a_6(a_5(a_4 c)).
[[nodiscard]] ActionResult act_word(const Word& w, const Configuration& c);

// Linear combination of configurations, zero coefficients never stored.
class ModuleElement {
 public:
  using Terms = std::map<Configuration, Coefficient>;

  explicit ModuleElement(Rank rank) : rank_(rank) {}
  [[nodiscard]] static ModuleElement basis(const Configuration& c, Coefficient coeff = 1);

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Configuration& c, const Coefficient& coeff);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  Rank rank_;
  Terms terms_;
};

// Bilinear extension of act_word; annihilated terms contribute zero.
[[nodiscard]] ModuleElement act_element(const AlgebraElement& e, const ModuleElement& v);

// Smallest configuration on which the monomial acts nontrivially:
// (k_1, ..., k_{N-1}, 0).
[[nodiscard]] Configuration min_input(const NormalMonomial& m);

// Image of min_input(m):
// (0, k_1 - d_2, k_2 + d_2 - d_3, ..., k_{N-2} + d_{N-2} - d_{N-1}, k_{N-1} + d_{N-1}).
[[nodiscard]] Configuration output_of(const NormalMonomial& m);

// The pair (output, minimal input) that names a basis monomial.
struct IoLabel {
  Configuration out;
  Configuration in;

  friend bool operator==(const IoLabel&, const IoLabel&) = default;
  friend auto operator<=>(const IoLabel&, const IoLabel&) = default;
};

[[nodiscard]] IoLabel io_label(const NormalMonomial& m);

// Inverse of io_label. Throws std::invalid_argument if no basis monomial
// carries the label.
[[nodiscard]] NormalMonomial monomial_from_io(const IoLabel& label);

enum class Side { left, right };

// a_i * a_{out,in} or a_{out,in} * a_i computed on the labels alone:
//
//   left,  i in out      -> (out - {i} + {i+1}, in)
//   left,  i not in out  -> (out + {i+1},       in + {i})
//   right, i+1 in in     -> (out,               in - {i+1} + {i})
//   right, i+1 not in in -> (out + {i+1},       in + {i})
//
// where position N is the deposit.
[[nodiscard]] IoLabel label_mul(const IoLabel& label, int i, Side side);

// True iff the labels (minimal input, action on it) of all basis monomials of
// length <= max_len are pairwise distinct. Labels are computed by running the
// action, not from the closed formula.
[[nodiscard]] bool faithfulness_check(Rank rank, int max_len);

// Graphviz digraph of the generator action on all configurations with exactly
// `particles` particles.
[[nodiscard]] std::string action_graph_dot(Rank rank, int particles);

[[nodiscard]] Configuration parse_configuration(Rank rank, std::string_view text);
// Comma-separated counts, deposit last.
[[nodiscard]] std::string to_string(const Configuration& c);
std::ostream& operator<<(std::ostream& os, const Configuration& c);
std::ostream& operator<<(std::ostream& os, const IoLabel& l);

}  // namespace partic
