#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "partic/affine.hpp"
#include "partic/center.hpp"
#include "partic/json.hpp"
#include "partic/normal_form.hpp"
#include "partic/particle.hpp"
#include "partic/verify.hpp"

namespace partic::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool quiet = false;
};

json with_schema(json body) {
  json out = {{"schema", 1}};
  out.update(body);
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Operand of `mul`: a JSON normal monomial or a plain word.
NormalMonomial parse_operand(const std::string& text, std::optional<int> n) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON operand: ") + e.what());
    }
    auto m = partic::json::monomial_from_json(j);
    if (n && m.rank().value() != *n) {
      throw std::invalid_argument("operand rank does not match --N");
    }
    return m;
  }
  if (!n) {
    throw std::invalid_argument("--N is required for word operands");
  }
  return normalize(parse_word(Rank(*n), text));
}

int cmd_normalize(const Globals& g, int n, const std::string& word, std::ostream& out) {
  const auto m = normalize(parse_word(Rank(n), word));
  if (g.json) {
    auto body = partic::json::to_json(m);
    body["word"] = partic::json::to_json(nm_to_word(m))["letters"];
    print_json(out, with_schema(body));
  } else {
    out << to_string(m) << '\n';
    if (!g.quiet) {
      out << to_power_string(m) << '\n';
    }
  }
  return kOk;
}

int cmd_mul(const Globals& g, std::optional<int> n, const std::string& lhs, const std::string& rhs,
            std::ostream& out) {
  const auto a = parse_operand(lhs, n);
  const auto b = parse_operand(rhs, n);
  const auto m = nm_product(a, b);
  if (g.json) {
    print_json(out, with_schema(partic::json::to_json(m)));
  } else {
    out << to_string(m) << '\n';
    if (!g.quiet) {
      out << to_power_string(m) << '\n';
    }
  }
  return kOk;
}

int cmd_act(const Globals& g, int n, const std::string& word, const std::string& config, bool dot,
            std::optional<int> particles, std::ostream& out) {
  const Rank rank(n);
  if (dot) {
    if (!particles) {
      throw std::invalid_argument("--dot needs --particles");
    }
    if (*particles < 0) {
      throw std::invalid_argument("--particles must be nonnegative");
    }
    out << action_graph_dot(rank, *particles);
    return kOk;
  }
  const auto result = act_word(parse_word(rank, word), parse_configuration(rank, config));
  if (g.json) {
    json body = {{"N", n}, {"annihilated", !result.has_value()}};
    if (result) {
      body["counts"] = partic::json::to_json(*result)["counts"];
    }
    print_json(out, with_schema(body));
  } else {
    out << (result ? to_string(*result) : std::string("0")) << '\n';
  }
  return kOk;
}

int cmd_basis(const Globals& g, int n, const std::string& degree_text, std::ostream& out) {
  const auto degree = parse_degree(Rank(n), degree_text);
  const auto basis = enumerate_basis(degree);
  if (g.json) {
    json list = json::array();
    for (const auto& m : basis) {
      list.push_back(partic::json::to_json(m));
    }
    print_json(out, with_schema({{"N", n}, {"degree", std::vector<int>(degree.counts().begin(), degree.counts().end())},
                                 {"basis", list}}));
    return kOk;
  }
  for (const auto& m : basis) {
    out << to_string(m);
    if (!g.quiet) {
      out << "  " << to_power_string(m);
    }
    out << '\n';
  }
  if (!g.quiet) {
    out << basis.size() << " basis monomials in degree " << degree << '\n';
  }
  return kOk;
}

int cmd_center(const Globals& g, int n, int max_degree, bool expect_theorem, std::ostream& out) {
  if (max_degree < 0) {
    throw std::invalid_argument("--max-degree must be nonnegative");
  }
  const Rank rank(n);
  bool matches = true;
  json rows = json::array();
  for (const auto& degree : degrees_up_to(rank, max_degree)) {
    const auto basis = center_basis_in_degree(degree);
    const std::size_t predicted = degree.is_diagonal() ? 1 : 0;
    bool ok = basis.size() == predicted;
    if (ok && predicted == 1) {
      ok = basis.front() == AlgebraElement::monomial(central_candidate(rank, degree[1]));
    }
    matches = matches && ok;
    if (g.json) {
      json elems = json::array();
      for (const auto& z : basis) {
        elems.push_back(partic::json::to_json(z)["terms"]);
      }
      rows.push_back({{"degree", std::vector<int>(degree.counts().begin(), degree.counts().end())},
                      {"dimension", basis.size()},
                      {"basis", elems}});
      continue;
    }
    if (g.quiet && basis.empty() && ok) {
      continue;
    }
    out << degree << " dim=" << basis.size();
    for (const auto& z : basis) {
      out << "  " << z;
    }
    if (expect_theorem && !ok) {
      out << "  MISMATCH";
    }
    out << '\n';
  }
  if (g.json) {
    json body = {{"N", n}, {"max_degree", max_degree}, {"degrees", rows}};
    if (expect_theorem) {
      body["matches_theorem"] = matches;
    }
    print_json(out, with_schema(body));
  }
  return expect_theorem && !matches ? kVerificationFailed : kOk;
}

int cmd_verify(const Globals& g, const VerifyOptions& options, bool timing, std::ostream& out) {
  if (options.max_len < 0 || options.max_degree < 0) {
    throw std::invalid_argument("bounds must be nonnegative");
  }
  const auto report = run_verify(options);
  if (g.json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry = {{"name", c.name}, {"parameters", c.parameters}, {"passed", c.passed}};
      if (!c.passed) {
        entry["counterexample"] = c.counterexample;
      }
      if (timing) {
        entry["wall_ms"] = c.wall_ms;
      }
      checks.push_back(entry);
    }
    print_json(out, with_schema({{"passed", report.passed()}, {"checks", checks}}));
  } else {
    for (const auto& c : report.checks) {
      if (g.quiet && c.passed) {
        continue;
      }
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.parameters << "]";
      if (!c.passed) {
        out << " counterexample: " << c.counterexample;
      }
      if (timing) {
        out << " (" << std::fixed << std::setprecision(1) << c.wall_ms << " ms)";
      }
      out << '\n';
    }
    out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_affine_verify(const Globals& g, int n, int particles, int m_max, int k_max,
                      std::ostream& out) {
  if (particles < 0) {
    throw std::invalid_argument("--particles must be nonnegative");
  }
  const auto instances = affine::relation_instances(n, m_max, k_max);
  std::size_t failed = 0;
  json failures = json::array();
  for (const auto& inst : instances) {
    const auto result = affine::verify_relation_on_module(inst.lhs, inst.rhs, particles);
    if (result.holds) {
      continue;
    }
    ++failed;
    if (g.json) {
      failures.push_back({{"family", inst.family},
                          {"lhs", inst.lhs.letters},
                          {"rhs", inst.rhs.letters},
                          {"witness", result.witness->occ}});
    } else {
      out << "FAIL " << inst.family << " [" << affine::to_string(inst.lhs) << "] = ["
          << affine::to_string(inst.rhs) << "] witness " << *result.witness << '\n';
    }
  }
  if (g.json) {
    print_json(out, with_schema({{"N", n},
                                 {"instances", instances.size()},
                                 {"failed", failed},
                                 {"failures", failures}}));
  } else if (!g.quiet || failed > 0) {
    out << (instances.size() - failed) << "/" << instances.size() << " affine relation instances verified\n";
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"partic: normal forms, particle action and center of the partic algebra"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_flag("--quiet", g.quiet, "Print only essential output");

  int n = 0;
  std::optional<int> n_opt;
  std::string word;
  std::string config;
  std::string degree;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word");
  normalize_cmd->add_option("--N", n, "Rank N >= 3")->required();
  normalize_cmd->add_option("--word", word, "Letters, comma or space separated")->required();

  std::string lhs;
  std::string rhs;
  auto* mul_cmd = app.add_subcommand("mul", "Product of two words or JSON monomials");
  mul_cmd->add_option("--N", n_opt, "Rank N >= 3 (needed for word operands)");
  mul_cmd->add_option("lhs", lhs, "Left factor")->required();
  mul_cmd->add_option("rhs", rhs, "Right factor")->required();

  bool dot = false;
  std::optional<int> particles;
  auto* act_cmd = app.add_subcommand("act", "Act with a word on a particle configuration");
  act_cmd->add_option("--N", n, "Rank N >= 3")->required();
  act_cmd->add_option("--word", word, "Letters; the rightmost acts first");
  act_cmd->add_option("--config", config, "Counts k_1,...,k_{N-1},k_0 (deposit last)");
  act_cmd->add_flag("--dot", dot, "Emit the action graph in Graphviz format");
  act_cmd->add_option("--particles", particles, "Particle number for --dot");

  auto* basis_cmd = app.add_subcommand("basis", "Basis monomials of a multidegree");
  basis_cmd->add_option("--N", n, "Rank N >= 3")->required();
  basis_cmd->add_option("--degree", degree, "Multidegree, N-1 entries")->required();

  int max_degree = 6;
  bool expect_theorem = false;
  auto* center_cmd = app.add_subcommand("center", "Graded dimensions of the center");
  center_cmd->add_option("--N", n, "Rank N >= 3")->required();
  center_cmd->add_option("--max-degree", max_degree, "Largest total degree")->required();
  center_cmd->add_flag("--expect-theorem", expect_theorem,
                       "Exit 1 unless the center is spanned by (a_{N-1}...a_1)^r");

  VerifyOptions verify_options;
  std::string relations = "partic";
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the certification suite");
  verify_cmd->add_option("--N", verify_options.n, "Rank N >= 3")->required();
  verify_cmd->add_option("--max-len", verify_options.max_len, "Word length bound");
  verify_cmd->add_option("--max-degree", verify_options.max_degree, "Degree bound for --center");
  verify_cmd->add_option("--relations", relations, "plactic or partic");
  verify_cmd->add_flag("--center", verify_options.center, "Include the center check");
  verify_cmd->add_flag("--timing", timing, "Report wall time per check");

  int affine_particles = 6;
  int m_max = 2;
  int k_max = 1;
  auto* affine_cmd = app.add_subcommand("affine-verify", "Check affine relations on the affine module");
  affine_cmd->add_option("--N", n, "Rank N >= 3")->required();
  affine_cmd->add_option("--particles", affine_particles, "Particle bound");
  affine_cmd->add_option("--m-max", m_max, "Bound on m and m'");
  affine_cmd->add_option("--k-max", k_max, "Bound on the middle exponents");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (*normalize_cmd) {
      return cmd_normalize(g, n, word, out);
    }
    if (*mul_cmd) {
      return cmd_mul(g, n_opt, lhs, rhs, out);
    }
    if (*act_cmd) {
      if (!dot && (act_cmd->count("--word") == 0 || act_cmd->count("--config") == 0)) {
        throw std::invalid_argument("act needs --word and --config (or --dot --particles)");
      }
      return cmd_act(g, n, word, config, dot, particles, out);
    }
    if (*basis_cmd) {
      return cmd_basis(g, n, degree, out);
    }
    if (*center_cmd) {
      return cmd_center(g, n, max_degree, expect_theorem, out);
    }
    if (*verify_cmd) {
      verify_options.relations = parse_relation_kind(relations);
      return cmd_verify(g, verify_options, timing, out);
    }
    if (*affine_cmd) {
      return cmd_affine_verify(g, n, affine_particles, m_max, k_max, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace partic::cli
