#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace partic::affine {

// Particles on a circle of N positions 1 ... N, plus the exponent t of q that
// counts how often a particle crossed from position N back to position 1.
struct Configuration {
  std::vector<int> occ;  // occ[p-1] = particles at position p
  int t = 0;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(occ.size()); }
  [[nodiscard]] int particles() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Letters are residues 0 ... N-1.
struct Word {
  int n = 0;
  std::vector<int> letters;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Throws std::invalid_argument if n < 3 or a letter is outside [0, n-1].
[[nodiscard]] Word make_word(int n, std::vector<int> letters);

using ActionResult = std::optional<Configuration>;

// a_i for 1 <= i <= N-1 moves a particle i -> i+1; a_0 moves one N -> 1 and
// raises t. Empty result when the source position is empty.
[[nodiscard]] ActionResult act_gen(int i, const Configuration& c);

// Rightmost letter acts first.
[[nodiscard]] ActionResult act_word(const Word& w, const Configuration& c);

struct RelationInstance {
  std::string family;  // comm, plac1, plac2, partic, family1, family2
  Word lhs;
  Word rhs;
};

// Concrete instances of the affine relations for rank n, indices mod n:
//
//   comm     a_i a_j = a_j a_i                        i - j != +-1, i != j
//   plac1    a_i a_{i-1} a_i = a_i a_i a_{i-1}
//   plac2    a_i a_{i+1} a_i = a_{i+1} a_i a_i
//   partic   a_i a_{i-1} a_{i+1} a_i = a_{i+1} a_i a_{i-1} a_i
//   family1  a_{i-1}^{m'} a_i^m M a_{i-1}^m = a_i^m a_{i-1}^{m'} M a_{i-1}^m
//   family2  a_i^m M a_{i-1}^m a_i^{m'} = a_i^m M a_i^{m'} a_{i-1}^m
//
// with M = a_{i+1}^{k_{i+1}} a_{i+2}^{k_{i+2}} ... a_{i-2}^{k_{i-2}}, for
// 0 <= m, m' <= m_max and 0 <= k_j <= k_max. Pairs with identical sides are
// dropped, as are repeats.
[[nodiscard]] std::vector<RelationInstance> relation_instances(int n, int m_max, int k_max);

// Every configuration on n positions with at most max_particles particles, t = 0.
[[nodiscard]] std::vector<Configuration> configurations_up_to(int n, int max_particles);

struct VerifyResult {
  bool holds = true;
  std::optional<Configuration> witness;  // first configuration where the sides differ
};

// Compares both sides on every configuration with <= max_particles particles
// and t = 0, including annihilation and the q exponent. Starting at t = 0
// loses nothing since every action commutes with shifting t.
[[nodiscard]] VerifyResult verify_relation_on_module(const Word& lhs, const Word& rhs,
                                                     int max_particles);

[[nodiscard]] std::string to_string(const Configuration& c);
[[nodiscard]] std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Configuration& c);

}  // namespace partic::affine
