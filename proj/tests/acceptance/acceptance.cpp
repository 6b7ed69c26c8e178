// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "partic/affine.hpp"
#include "partic/center.hpp"
#include "partic/normal_form.hpp"
#include "partic/oracle.hpp"
#include "partic/particle.hpp"

namespace {

using namespace partic;

struct Verdict {
  bool passed = true;
  std::string detail;
};

Verdict fail(std::string detail) { return {false, std::move(detail)}; }

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

Verdict basis_theorem() {
  int degrees = 0;
  for (int n : {3, 4}) {
    const Rank rank(n);
    const RelationSet rs(RelationKind::partic, rank);
    for (const auto& degree : degrees_up_to(rank, 6)) {
      const int classes = count_classes(degree, rs);
      const auto basis = enumerate_basis(degree).size();
      if (static_cast<std::size_t>(classes) != basis) {
        return fail("N=" + std::to_string(n) + " degree " + str(degree) + ": " + std::to_string(classes) +
                    " classes vs " + std::to_string(basis) + " basis monomials");
      }
      ++degrees;
    }
  }
  return {true, std::to_string(degrees) + " degrees, N in {3,4}, |delta| <= 6"};
}

Verdict normal_form_soundness() {
  const Rank rank(4);
  const RelationSet rs(RelationKind::partic, rank);
  std::size_t words = 0;
  for (const auto& degree : degrees_up_to(rank, 6)) {
    std::map<NormalMonomial, std::size_t> owner;
    const auto classes = partition_classes(degree, rs);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = classes[c];
      const NormalMonomial nf = normalize(*cls.begin());
      for (const auto& w : cls) {
        ++words;
        const NormalMonomial m = normalize(w);
        if (m != nf) {
          return fail("congruent words " + str(w) + " and " + str(*cls.begin()) + " normalize differently");
        }
        if (!cls.contains(nm_to_word(m))) {
          return fail("normal form of " + str(w) + " is not congruent to it");
        }
      }
      const auto [it, fresh] = owner.emplace(nf, c);
      if (!fresh) {
        return fail("distinct classes share the normal form " + to_string(nf));
      }
    }
  }
  return {true, std::to_string(words) + " words of length <= 6 at N=4"};
}

Verdict faithfulness() {
  const Rank rank(4);
  if (!faithfulness_check(rank, 5)) {
    return fail("labels of basis monomials of length <= 5 collide");
  }
  const auto configs = configurations_bounded(rank, 5, 1);
  std::size_t pairs = 0;
  for (const auto& w : all_words(rank, 5)) {
    const Word normal = nm_to_word(normalize(w));
    for (const auto& c : configs) {
      if (act_word(w, c) != act_word(normal, c)) {
        return fail("action of " + str(w) + " differs from its normal form on " + to_string(c));
      }
      ++pairs;
    }
  }
  return {true, "labels injective, " + std::to_string(pairs) + " word/configuration pairs factor"};
}

Verdict worked_examples() {
  const Rank n9(9);
  const auto figure = act_word(Word(n9, {6, 5, 4}), Configuration(n9, {3, 0, 0, 1, 0, 1, 2, 0, 1}));
  if (figure != Configuration(n9, {3, 0, 0, 0, 0, 1, 3, 0, 1})) {
    return fail("figure action example");
  }

  const Rank n6(6);
  const NormalMonomial m(n6, {0, 0, 0, 1}, {0, 2, 1, 2, 0});
  auto cfg = [&](std::vector<int> v) { return Configuration(n6, std::move(v)); };
  const IoLabel l = io_label(m);
  if (to_power_string(m) != "a5 a2^2 a3 a4^2" || l.in != cfg({0, 2, 1, 2, 0, 0}) ||
      l.out != cfg({0, 0, 2, 1, 1, 1}) || monomial_from_io(l) != m) {
    return fail("N=6 label example");
  }
  const std::vector<std::pair<IoLabel, IoLabel>> products = {
      {label_mul(l, 3, Side::left), {cfg({0, 0, 1, 2, 1, 1}), cfg({0, 2, 1, 2, 0, 0})}},
      {label_mul(l, 3, Side::right), {cfg({0, 0, 2, 1, 1, 1}), cfg({0, 2, 2, 1, 0, 0})}},
      {label_mul(l, 1, Side::left), {cfg({0, 1, 2, 1, 1, 1}), cfg({1, 2, 1, 2, 0, 0})}},
      {label_mul(l, 1, Side::right), {cfg({0, 0, 2, 1, 1, 1}), cfg({1, 1, 1, 2, 0, 0})}},
  };
  for (const auto& [got, want] : products) {
    if (got != want) {
      return fail("label product " + str(got) + " expected " + str(want));
    }
  }
  for (int i : {1, 3}) {
    if (label_mul(l, i, Side::left) != io_label(left_mul_gen(i, m)) ||
        label_mul(l, i, Side::right) != io_label(right_mul_gen(m, i))) {
      return fail("label product disagrees with monomial product for i=" + std::to_string(i));
    }
  }

  const Rank n4(4);
  auto word = [&](std::vector<std::pair<int, int>> powers) {
    std::vector<int> letters;
    for (auto [g, e] : powers) {
      letters.insert(letters.end(), static_cast<std::size_t>(e), g);
    }
    return normalize(Word(n4, letters));
  };
  const auto difference = AlgebraElement::monomial(word({{3, 5}, {2, 8}, {1, 8}, {2, 3}, {3, 1}})) -
                          AlgebraElement::monomial(word({{3, 5}, {2, 7}, {1, 8}, {2, 4}, {3, 1}}));
  if (difference.is_zero() || !(AlgebraElement::generator(n4, 2) * difference).is_zero()) {
    return fail("zero-divisor identity at N=4");
  }
  return {true, "figure action, N=6 labels and products, zero divisor at N=4"};
}

Verdict center_theorem() {
  int degrees = 0;
  for (int n : {3, 4}) {
    const Rank rank(n);
    for (const auto& degree : degrees_up_to(rank, 9)) {
      const auto basis = center_basis_in_degree(degree);
      if (degree.is_diagonal()) {
        if (basis.size() != 1 || basis[0] != AlgebraElement::monomial(central_candidate(rank, degree[1]))) {
          return fail("N=" + std::to_string(n) + " degree " + str(degree) + ": expected the central candidate");
        }
      } else if (!basis.empty()) {
        return fail("N=" + std::to_string(n) + " degree " + str(degree) + ": unexpected central element " +
                    to_string(basis[0]));
      }
      ++degrees;
    }
  }
  return {true, std::to_string(degrees) + " degrees, N in {3,4}, |delta| <= 9"};
}

Verdict affine_soundness() {
  const auto figure = affine::act_word(affine::make_word(8, {6, 5, 3, 2, 5}),
                                       affine::Configuration{{3, 1, 0, 0, 2, 0, 0, 1}, 0});
  const bool figure_ok = figure == affine::Configuration{{3, 0, 0, 1, 0, 1, 1, 1}, 0};
  std::size_t total = 0;
  std::string failures;
  int failed = 0;
  for (int n : {3, 4, 5}) {
    for (const auto& r : affine::relation_instances(n, 2, 1)) {
      ++total;
      const auto result = affine::verify_relation_on_module(r.lhs, r.rhs, 6);
      if (!result.holds) {
        if (failed++ == 0) {
          failures = "N=" + std::to_string(n) + " " + r.family + " " + affine::to_string(r.lhs) + " = " +
                     affine::to_string(r.rhs) + " witness " + affine::to_string(*result.witness);
        }
      }
    }
  }
  if (!figure_ok) {
    return fail("figure example at N=8");
  }
  if (failed > 0) {
    return fail(std::to_string(failed) + "/" + std::to_string(total) + " instances fail, first: " + failures);
  }
  return {true, std::to_string(total) + " instances, N in {3,4,5}, <= 6 particles; figure example"};
}

Verdict strictness() {
  const Rank rank(5);
  const MultiDegree degree(rank, {1, 2, 1, 1});
  const int plactic = count_classes(degree, RelationSet(RelationKind::plactic, rank));
  const auto basis = enumerate_basis(degree).size();
  const std::string detail = "plactic classes " + std::to_string(plactic) + ", partic basis " + std::to_string(basis);
  if (static_cast<std::size_t>(plactic) <= basis) {
    return fail(detail);
  }
  return {true, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 basis theorem", basis_theorem},
      {"2 normal form soundness and completeness", normal_form_soundness},
      {"3 faithfulness", faithfulness},
      {"4 worked examples", worked_examples},
      {"5 center theorem", center_theorem},
      {"6 affine relation soundness", affine_soundness},
      {"7 strictness of the quotient", strictness},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.passed;
    std::cout << (v.passed ? "PASS" : "FAIL") << " [" << name << "] " << v.detail << " (" << seconds << " s)"
              << std::endl;
  }
  return all ? 0 : 1;
}
