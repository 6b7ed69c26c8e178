#include "partic/json.hpp"

#include <stdexcept>

namespace partic::json {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

Rank rank_of(const json& j) { return Rank(field<int>(j, "N")); }

}  // namespace

json to_json(const Word& w) {
  return {{"N", w.rank().value()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

json to_json(const NormalMonomial& m) {
  return {{"N", m.rank().value()},
          {"d", std::vector<int>(m.d_values().begin(), m.d_values().end())},
          {"k", std::vector<int>(m.k_values().begin(), m.k_values().end())}};
}

json to_json(const Configuration& c) {
  return {{"N", c.rank().value()}, {"counts", std::vector<int>(c.counts().begin(), c.counts().end())}};
}

json to_json(const AlgebraElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    terms.push_back({{"d", std::vector<int>(m.d_values().begin(), m.d_values().end())},
                     {"k", std::vector<int>(m.k_values().begin(), m.k_values().end())},
                     {"coeff", to_string(c)}});
  }
  return {{"N", e.rank().value()}, {"terms", std::move(terms)}};
}

Word word_from_json(const json& j) { return Word(rank_of(j), field<std::vector<int>>(j, "letters")); }

NormalMonomial monomial_from_json(const json& j) {
  return NormalMonomial(rank_of(j), field<std::vector<int>>(j, "d"), field<std::vector<int>>(j, "k"));
}

Configuration configuration_from_json(const json& j) {
  return Configuration(rank_of(j), field<std::vector<int>>(j, "counts"));
}

AlgebraElement element_from_json(const json& j) {
  const Rank rank = rank_of(j);
  AlgebraElement e(rank);
  for (const auto& term : field<json>(j, "terms")) {
    NormalMonomial m(rank, field<std::vector<int>>(term, "d"), field<std::vector<int>>(term, "k"));
    Coefficient c;
    try {
      c = Coefficient(field<std::string>(term, "coeff"));
    } catch (const std::runtime_error& err) {
      throw std::invalid_argument(std::string("bad coefficient: ") + err.what());
    }
    e.add_term(m, c);
  }
  return e;
}

}  // namespace partic::json
