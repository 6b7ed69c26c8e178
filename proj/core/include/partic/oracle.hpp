#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "partic/word.hpp"

namespace partic {

// One concrete instance lhs = rhs of a defining relation. Rules are applied
// in both directions.
struct RewriteRule {
  std::string family;  // "plac1", "plac2", "comm" or "partic"
  std::vector<int> lhs;
  std::vector<int> rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

enum class RelationKind { plactic, partic };

[[nodiscard]] std::string_view to_string(RelationKind kind);
// Accepts "plactic" or "partic"; throws std::invalid_argument otherwise.
[[nodiscard]] RelationKind parse_relation_kind(std::string_view name);

// All rule instances of the plactic relations
//
//   a_i a_{i-1} a_i = a_i a_i a_{i-1}      2 <= i <= N-1
//   a_i a_{i+1} a_i = a_{i+1} a_i a_i      1 <= i <= N-2
//   a_i a_j = a_j a_i                      |i - j| > 1
//
// and, for the partic set, additionally
//
//   a_i a_{i-1} a_{i+1} a_i = a_{i+1} a_i a_{i-1} a_i    2 <= i <= N-2
//
// instantiated for a fixed rank. For N = 3 the last family is empty, so the
// two sets coincide there.
class RelationSet {
 public:
  RelationSet(RelationKind kind, Rank rank);

  [[nodiscard]] RelationKind kind() const noexcept { return kind_; }
  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  [[nodiscard]] const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

 private:
  RelationKind kind_;
  Rank rank_;
  std::vector<RewriteRule> rules_;
};

// Words reachable from w by one application of a rule, in either direction,
// at any position. Does not contain w itself.
[[nodiscard]] std::set<Word> one_step_rewrites(const Word& w, const RelationSet& rs);

// Closure of w under one_step_rewrites (breadth first). Finite because every
// rule preserves the multidegree.
[[nodiscard]] std::set<Word> congruence_class(const Word& w, const RelationSet& rs);

[[nodiscard]] bool words_equivalent(const Word& a, const Word& b, const RelationSet& rs);

// Partition of all words of the given multidegree into congruence classes.
// Classes are listed in order of their smallest member.
[[nodiscard]] std::vector<std::set<Word>> partition_classes(const MultiDegree& degree,
                                                            const RelationSet& rs);

[[nodiscard]] int count_classes(const MultiDegree& degree, const RelationSet& rs);

}  // namespace partic
