#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "partic/algebra_element.hpp"
#include "partic/json.hpp"
#include "partic/normal_form.hpp"
#include "partic/normal_monomial.hpp"
#include "partic/oracle.hpp"
#include "partic/word.hpp"

namespace partic {
namespace {

TEST(Rank, RejectsSmallN) {
  EXPECT_THROW(Rank(2), std::invalid_argument);
  EXPECT_THROW(Rank(-1), std::invalid_argument);
  EXPECT_EQ(Rank(3).generators(), 2);
}

TEST(Word, RejectsOutOfRangeLetters) {
  EXPECT_THROW(Word(Rank(3), {0}), std::invalid_argument);
  EXPECT_THROW(Word(Rank(3), {3}), std::invalid_argument);
  EXPECT_NO_THROW(Word(Rank(3), {1, 2}));
}

TEST(Multidegree, CountsLetters) {
  EXPECT_EQ(multidegree(Word(Rank(5))), MultiDegree(Rank(5), {0, 0, 0, 0}));
  EXPECT_EQ(multidegree(Word(Rank(5), {4, 3, 2, 1, 2})), MultiDegree(Rank(5), {1, 2, 1, 1}));
  EXPECT_EQ(multidegree(Word(Rank(3), {2, 1, 2})), MultiDegree(Rank(3), {1, 2}));
}

TEST(Multidegree, PreservedByEveryRuleInstance) {
  for (int n = 3; n <= 5; ++n) {
    for (auto kind : {RelationKind::plactic, RelationKind::partic}) {
      const RelationSet rs(kind, Rank(n));
      for (const auto& rule : rs.rules()) {
        EXPECT_EQ(multidegree(Word(Rank(n), rule.lhs)), multidegree(Word(Rank(n), rule.rhs)))
            << rule.family;
      }
    }
  }
}

// Every rewrite step of every word up to length 8 (N <= 4) or 6 (N = 5)
// keeps the multidegree.
TEST(Multidegree, PreservedByRewriteSteps) {
  for (int n = 3; n <= 5; ++n) {
    const Rank rank(n);
    const RelationSet rs(RelationKind::partic, rank);
    const int max_len = n <= 4 ? 8 : 6;
    for (const auto& w : all_words(rank, max_len)) {
      for (const auto& next : one_step_rewrites(w, rs)) {
        ASSERT_EQ(multidegree(next), multidegree(w)) << w << " -> " << next;
      }
    }
  }
}

TEST(Parsing, AcceptsCommasAndWhitespace) {
  EXPECT_EQ(parse_word(Rank(5), "4 3 2 1 2"), Word(Rank(5), {4, 3, 2, 1, 2}));
  EXPECT_EQ(parse_word(Rank(5), "4,3, 2\t1,,2"), Word(Rank(5), {4, 3, 2, 1, 2}));
  EXPECT_TRUE(parse_word(Rank(5), "").empty());
  EXPECT_THROW(parse_word(Rank(5), "4 x"), std::invalid_argument);
  EXPECT_THROW(parse_word(Rank(5), "-1"), std::invalid_argument);
  EXPECT_THROW(parse_word(Rank(5), "5"), std::invalid_argument);
  EXPECT_THROW(parse_degree(Rank(4), "1 2"), std::invalid_argument);
}

TEST(NormalMonomial, NmToWord) {
  EXPECT_EQ(nm_to_word(NormalMonomial(Rank(3), {1}, {1, 0})), Word(Rank(3), {2, 1}));
  EXPECT_EQ(nm_to_word(NormalMonomial(Rank(5), {1, 1, 1}, {1, 1, 0, 0})),
            Word(Rank(5), {4, 3, 2, 1, 2}));
  EXPECT_TRUE(nm_to_word(NormalMonomial(Rank(4))).empty());
}

TEST(NormalMonomial, RejectsViolatedBounds) {
  EXPECT_THROW(NormalMonomial(Rank(3), {1}, {0, 5}), std::invalid_argument);  // d_2 > k_1
  EXPECT_THROW(NormalMonomial(Rank(4), {1, 3}, {1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(NormalMonomial(Rank(4), {0}, {1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(NormalMonomial(Rank(3), {0}, {-1, 0}), std::invalid_argument);
  EXPECT_NO_THROW(NormalMonomial(Rank(4), {1, 2}, {1, 1, 0}));
}

TEST(NormalMonomial, DOneIsZero) {
  const NormalMonomial m(Rank(4), {1, 2}, {1, 1, 0});
  EXPECT_EQ(m.d(1), 0);
  EXPECT_EQ(m.d(2), 1);
  EXPECT_EQ(m.d(3), 2);
  EXPECT_EQ(m.degree(), MultiDegree(Rank(4), {1, 2, 2}));
}

// Brute force over all (d, k) with d_i + k_i <= 3, filtered by the bounds,
// grouped by degree, must equal enumerate_basis on each of those degrees.
TEST(NormalMonomial, ValidityMatchesEnumeration) {
  for (int n = 3; n <= 4; ++n) {
    const Rank rank(n);
    const int g = n - 1;
    std::map<MultiDegree, std::vector<NormalMonomial>> by_degree;
    // odometer over 2g - 1 exponents each in 0..3
    std::vector<int> digits(static_cast<std::size_t>(2 * g - 1), 0);
    while (true) {
      std::vector<int> d(digits.begin(), digits.begin() + (g - 1));
      std::vector<int> k(digits.begin() + (g - 1), digits.end());
      bool small = k[0] <= 3;
      for (int i = 2; i <= g; ++i) {
        small = small && d[static_cast<std::size_t>(i - 2)] + k[static_cast<std::size_t>(i - 1)] <= 3;
      }
      if (small && NormalMonomial::satisfies_bounds(d, k)) {
        NormalMonomial m(rank, d, k);
        by_degree[m.degree()].push_back(m);
      }
      std::size_t pos = 0;
      while (pos < digits.size() && digits[pos] == 3) {
        digits[pos++] = 0;
      }
      if (pos == digits.size()) {
        break;
      }
      ++digits[pos];
    }
    for (auto& [degree, monomials] : by_degree) {
      std::sort(monomials.begin(), monomials.end());
      EXPECT_EQ(enumerate_basis(degree), monomials) << degree;
    }
  }
}

TEST(AlgebraElement, AdditiveInverseIsZero) {
  const Rank rank(4);
  AlgebraElement e = AlgebraElement::monomial(NormalMonomial(rank, {1, 0}, {1, 2, 0}), 3);
  e += AlgebraElement::generator(rank, 2);
  EXPECT_TRUE((e + Coefficient(-1) * e).is_zero());
  EXPECT_TRUE((Coefficient(0) * e).is_zero());
  EXPECT_TRUE(elem_scale(0, e).terms().empty());
}

TEST(AlgebraElement, CollectsTerms) {
  const NormalMonomial m(Rank(3), {1}, {1, 0});
  const auto sum = AlgebraElement::monomial(m, 1) + AlgebraElement::monomial(m, 2);
  ASSERT_EQ(sum.terms().size(), 1u);
  EXPECT_EQ(sum.coefficient(m), Coefficient(3));
}

TEST(AlgebraElement, EqualityIgnoresInsertionOrder) {
  const Rank rank(4);
  std::vector<std::pair<NormalMonomial, Coefficient>> terms;
  for (const auto& m : enumerate_basis(MultiDegree(rank, {2, 2, 1}))) {
    terms.emplace_back(m, Coefficient(static_cast<int>(terms.size()) + 1) / 7);
  }
  std::mt19937 rng(7);
  AlgebraElement reference(rank);
  for (const auto& [m, c] : terms) {
    reference.add_term(m, c);
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(terms.begin(), terms.end(), rng);
    AlgebraElement e(rank);
    for (const auto& [m, c] : terms) {
      e.add_term(m, c);
    }
    EXPECT_TRUE(elem_eq(e, reference));
  }
}

TEST(AlgebraElement, RankMismatchThrows) {
  EXPECT_THROW(elem_add(AlgebraElement::unit(Rank(3)), AlgebraElement::unit(Rank(4))),
               std::invalid_argument);
  EXPECT_THROW((void)elem_eq(AlgebraElement::unit(Rank(3)), AlgebraElement::unit(Rank(4))),
               std::invalid_argument);
}

TEST(Json, WireFormats) {
  const NormalMonomial m(Rank(5), {1, 1, 1}, {1, 1, 0, 0});
  EXPECT_EQ(json::to_json(m).dump(), R"({"N":5,"d":[1,1,1],"k":[1,1,0,0]})");
  EXPECT_EQ(json::to_json(Word(Rank(5), {4, 3, 2, 1, 2})).dump(),
            R"({"N":5,"letters":[4,3,2,1,2]})");
  EXPECT_EQ(json::monomial_from_json(nlohmann::json::parse(R"({"N":5,"d":[1,1,1],"k":[1,1,0,0]})")), m);
  EXPECT_EQ(json::word_from_json(nlohmann::json::parse(R"({"N":5,"letters":[4,3,2,1,2]})")),
            Word(Rank(5), {4, 3, 2, 1, 2}));
  EXPECT_THROW((void)json::monomial_from_json(nlohmann::json::parse(R"({"N":5,"d":[1]})")),
               std::invalid_argument);
  EXPECT_THROW((void)json::word_from_json(nlohmann::json::parse(R"({"N":"five","letters":[]})")),
               std::invalid_argument);
}

TEST(Json, ElementRoundTrip) {
  const Rank rank(3);
  AlgebraElement e(rank);
  e.add_term(NormalMonomial(rank, {1}, {1, 0}), Coefficient(-1) / 2);
  e.add_term(NormalMonomial(rank, {0}, {1, 1}), 3);
  EXPECT_EQ(json::element_from_json(json::to_json(e)), e);
}

}  // namespace
}  // namespace partic
