#include "partic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "partic/center.hpp"
#include "partic/normal_form.hpp"
#include "partic/particle.hpp"

namespace partic {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Each check returns an empty string on success, otherwise a counterexample.
using Check = std::function<std::string()>;

CheckResult timed(std::string name, std::string parameters, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure = check();
  const auto stop = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  r.parameters = std::move(parameters);
  r.passed = failure.empty();
  r.counterexample = std::move(failure);
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string check_grading(Rank rank, int max_len) {
  for (const auto& w : all_words(rank, max_len)) {
    if (multidegree(nm_to_word(normalize(w))) != multidegree(w)) {
      return describe("word ", w, " changes multidegree");
    }
  }
  return {};
}

std::string check_fold_agreement(Rank rank, int max_len) {
  for (const auto& w : all_words(rank, max_len)) {
    if (normalize(w) != normalize_by_left_fold(w)) {
      return describe("word ", w, ": ", normalize(w), " vs ", normalize_by_left_fold(w));
    }
  }
  return {};
}

std::string check_classes(const RelationSet& rs, int max_len) {
  const bool partic = rs.kind() == RelationKind::partic;
  for (const auto& degree : degrees_up_to(rs.rank(), max_len)) {
    const auto classes = partition_classes(degree, rs);
    std::set<NormalMonomial> images;
    for (const auto& cls : classes) {
      const auto nf = normalize(*cls.begin());
      for (const auto& w : cls) {
        if (normalize(w) != nf) {
          return describe("congruent words ", *cls.begin(), " and ", w, " normalize differently");
        }
      }
      if (partic && !cls.contains(nm_to_word(nf))) {
        return describe("normal form ", nf, " of ", *cls.begin(), " is not in its class");
      }
      images.insert(nf);
    }
    if (partic && images.size() != classes.size()) {
      return describe("degree ", degree, ": distinct classes share a normal form");
    }
  }
  return {};
}

std::string check_class_count(const RelationSet& rs, int max_len) {
  const bool partic = rs.kind() == RelationKind::partic;
  for (const auto& degree : degrees_up_to(rs.rank(), max_len)) {
    const auto classes = static_cast<std::size_t>(count_classes(degree, rs));
    const auto basis = enumerate_basis(degree).size();
    if (partic ? classes != basis : classes < basis) {
      return describe("degree ", degree, ": ", classes, " classes vs ", basis, " basis monomials");
    }
  }
  return {};
}

std::string check_action_factoring(Rank rank, int max_len) {
  const auto configs = configurations_bounded(rank, max_len, 2);
  for (const auto& w : all_words(rank, max_len)) {
    const Word nf = nm_to_word(normalize(w));
    for (const auto& c : configs) {
      if (act_word(w, c) != act_word(nf, c)) {
        return describe("word ", w, " on ", c);
      }
    }
  }
  return {};
}

std::string check_relation_action(const RelationSet& rs, int max_particles) {
  const auto configs = configurations_bounded(rs.rank(), max_particles, 2);
  for (const auto& rule : rs.rules()) {
    const Word lhs(rs.rank(), rule.lhs);
    const Word rhs(rs.rank(), rule.rhs);
    for (const auto& c : configs) {
      if (act_word(lhs, c) != act_word(rhs, c)) {
        return describe(rule.family, " ", lhs, " = ", rhs, " on ", c);
      }
    }
  }
  return {};
}

std::string check_center(Rank rank, int max_degree) {
  for (const auto& degree : degrees_up_to(rank, max_degree)) {
    const auto basis = center_basis_in_degree(degree);
    const std::size_t expected = degree.is_diagonal() ? 1 : 0;
    if (basis.size() != expected) {
      return describe("degree ", degree, ": center dimension ", basis.size(), ", expected ",
                      expected);
    }
    if (expected == 1 &&
        basis.front() != AlgebraElement::monomial(central_candidate(rank, degree[1]))) {
      return describe("degree ", degree, ": central element ", basis.front(),
                      " is not the candidate");
    }
  }
  return {};
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const Rank rank(options.n);
  const RelationSet rs(options.relations, rank);
  const std::string len = describe("N=", options.n, " max_len=", options.max_len);
  const std::string rel = describe(len, " relations=", to_string(options.relations));

  VerifyReport report;
  auto& checks = report.checks;
  checks.push_back(timed("grading", len, [&] { return check_grading(rank, options.max_len); }));
  checks.push_back(timed("fold-agreement", len,
                         [&] { return check_fold_agreement(rank, options.max_len); }));
  checks.push_back(timed("normal-form-oracle", rel, [&] { return check_classes(rs, options.max_len); }));
  checks.push_back(timed("class-count", rel, [&] { return check_class_count(rs, options.max_len); }));
  checks.push_back(timed("action-factoring", len,
                         [&] { return check_action_factoring(rank, options.max_len); }));
  checks.push_back(timed("relation-action", rel,
                         [&] { return check_relation_action(rs, options.max_len); }));
  checks.push_back(timed("faithfulness", len, [&] {
    return faithfulness_check(rank, options.max_len) ? std::string{}
                                                     : std::string("labels not injective");
  }));
  if (options.center) {
    checks.push_back(timed("center", describe("N=", options.n, " max_degree=", options.max_degree),
                           [&] { return check_center(rank, options.max_degree); }));
  }
  std::sort(checks.begin(), checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace partic
