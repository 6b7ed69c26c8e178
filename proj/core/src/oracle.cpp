#include "partic/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace partic {

std::string_view to_string(RelationKind kind) {
  return kind == RelationKind::plactic ? "plactic" : "partic";
}

RelationKind parse_relation_kind(std::string_view name) {
  if (name == "plactic") {
    return RelationKind::plactic;
  }
  if (name == "partic") {
    return RelationKind::partic;
  }
  throw std::invalid_argument("unknown relation set '" + std::string(name) +
                              "' (expected plactic or partic)");
}

RelationSet::RelationSet(RelationKind kind, Rank rank) : kind_(kind), rank_(rank) {
  const int top = rank.generators();
  for (int i = 2; i <= top; ++i) {
    rules_.push_back({"plac1", {i, i - 1, i}, {i, i, i - 1}});
  }
  for (int i = 1; i <= top - 1; ++i) {
    rules_.push_back({"plac2", {i, i + 1, i}, {i + 1, i, i}});
  }
  for (int i = 1; i <= top; ++i) {
    for (int j = i + 2; j <= top; ++j) {
      rules_.push_back({"comm", {i, j}, {j, i}});
    }
  }
  if (kind == RelationKind::partic) {
    for (int i = 2; i <= top - 1; ++i) {
      rules_.push_back({"partic", {i, i - 1, i + 1, i}, {i + 1, i, i - 1, i}});
    }
  }
}

namespace {

void rewrite_all(std::span<const int> letters, const std::vector<int>& from,
                 const std::vector<int>& to, Rank rank, std::set<Word>& out) {
  if (from.size() > letters.size()) {
    return;
  }
  for (std::size_t pos = 0; pos + from.size() <= letters.size(); ++pos) {
    if (!std::equal(from.begin(), from.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos))) {
      continue;
    }
    std::vector<int> next(letters.begin(), letters.end());
    std::copy(to.begin(), to.end(), next.begin() + static_cast<std::ptrdiff_t>(pos));
    out.emplace(rank, std::move(next));
  }
}

void require_rank(const Word& w, const RelationSet& rs) {
  if (w.rank() != rs.rank()) {
    throw std::invalid_argument("word and relation set have different ranks");
  }
}

}  // namespace

std::set<Word> one_step_rewrites(const Word& w, const RelationSet& rs) {
  require_rank(w, rs);
  std::set<Word> out;
  for (const auto& rule : rs.rules()) {
    rewrite_all(w.letters(), rule.lhs, rule.rhs, w.rank(), out);
    rewrite_all(w.letters(), rule.rhs, rule.lhs, w.rank(), out);
  }
  out.erase(w);
  return out;
}

std::set<Word> congruence_class(const Word& w, const RelationSet& rs) {
  require_rank(w, rs);
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    const Word current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& next : one_step_rewrites(current, rs)) {
      if (seen.insert(next).second) {
        frontier.push_back(next);
      }
    }
  }
  return seen;
}

bool words_equivalent(const Word& a, const Word& b, const RelationSet& rs) {
  if (multidegree(a) != multidegree(b)) {
    return false;
  }
  return congruence_class(a, rs).contains(b);
}

std::vector<std::set<Word>> partition_classes(const MultiDegree& degree, const RelationSet& rs) {
  if (degree.rank() != rs.rank()) {
    throw std::invalid_argument("degree and relation set have different ranks");
  }
  std::vector<std::set<Word>> classes;
  std::set<Word> visited;
  for (const auto& w : words_of_degree(degree)) {
    if (visited.contains(w)) {
      continue;
    }
    auto cls = congruence_class(w, rs);
    visited.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

int count_classes(const MultiDegree& degree, const RelationSet& rs) {
  return static_cast<int>(partition_classes(degree, rs).size());
}

}  // namespace partic
