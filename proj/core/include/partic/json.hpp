#pragma once

#include <nlohmann/json.hpp>

#include "partic/algebra_element.hpp"
#include "partic/normal_monomial.hpp"
#include "partic/particle.hpp"
#include "partic/word.hpp"

// Wire formats:
//
//   word            {"N":5,"letters":[4,3,2,1,2]}
//   normal monomial {"N":5,"d":[1,1,1],"k":[1,1,0,0]}   d for 2..N-1, k for 1..N-1
//   configuration   {"N":3,"counts":[1,0,2]}              deposit last
//   element         {"N":3,"terms":[{"d":[1],"k":[1,0],"coeff":"-1/2"}, ...]}
//
// Parsing throws std::invalid_argument on schema violations.
namespace partic::json {

using nlohmann::json;

[[nodiscard]] json to_json(const Word& w);
[[nodiscard]] json to_json(const NormalMonomial& m);
[[nodiscard]] json to_json(const Configuration& c);
[[nodiscard]] json to_json(const AlgebraElement& e);

[[nodiscard]] Word word_from_json(const json& j);
[[nodiscard]] NormalMonomial monomial_from_json(const json& j);
[[nodiscard]] Configuration configuration_from_json(const json& j);
[[nodiscard]] AlgebraElement element_from_json(const json& j);

}  // namespace partic::json
