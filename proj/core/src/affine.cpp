#include "partic/affine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "partic/word.hpp"

namespace partic::affine {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void append_power(std::vector<int>& letters, int generator, int exponent) {
  letters.insert(letters.end(), static_cast<std::size_t>(exponent), generator);
}

}  // namespace

int Configuration::particles() const noexcept { return std::accumulate(occ.begin(), occ.end(), 0); }

Word make_word(int n, std::vector<int> letters) {
  if (n < 3) {
    throw std::invalid_argument("affine rank must be >= 3");
  }
  for (int a : letters) {
    if (a < 0 || a >= n) {
      throw std::invalid_argument("affine letter " + std::to_string(a) + " out of range");
    }
  }
  return Word{n, std::move(letters)};
}

ActionResult act_gen(int i, const Configuration& c) {
  const int n = c.size();
  if (i < 0 || i >= n) {
    throw std::out_of_range("affine generator index out of range");
  }
  // a_i takes from position i (a_0 from position n) and drops at the next one.
  const int from = i == 0 ? n : i;
  const int to = i == 0 ? 1 : i + 1;
  if (c.occ[static_cast<std::size_t>(from - 1)] == 0) {
    return std::nullopt;
  }
  Configuration out = c;
  --out.occ[static_cast<std::size_t>(from - 1)];
  ++out.occ[static_cast<std::size_t>(to - 1)];
  if (i == 0) {
    ++out.t;
  }
  return out;
}

ActionResult act_word(const Word& w, const Configuration& c) {
  if (w.n != c.size()) {
    throw std::invalid_argument("affine word and configuration have different ranks");
  }
  ActionResult current = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && current; ++it) {
    current = act_gen(*it, *current);
  }
  return current;
}

std::vector<RelationInstance> relation_instances(int n, int m_max, int k_max) {
  if (n < 3 || m_max < 0 || k_max < 0) {
    throw std::invalid_argument("relation instance bounds must be nonnegative and n >= 3");
  }
  std::vector<RelationInstance> out;
  std::set<std::pair<Word, Word>> seen;
  auto emit = [&](const char* family, std::vector<int> lhs, std::vector<int> rhs) {
    if (lhs == rhs) {
      return;
    }
    Word l = make_word(n, std::move(lhs));
    Word r = make_word(n, std::move(rhs));
    if (seen.emplace(l, r).second) {
      out.push_back({family, std::move(l), std::move(r)});
    }
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int diff = mod(j - i, n);
      if (diff != 1 && diff != n - 1) {
        emit("comm", {i, j}, {j, i});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int prev = mod(i - 1, n);
    emit("plac1", {i, prev, i}, {i, i, prev});
  }
  for (int i = 0; i < n; ++i) {
    const int next = mod(i + 1, n);
    emit("plac2", {i, next, i}, {next, i, i});
  }
  for (int i = 0; i < n; ++i) {
    const int prev = mod(i - 1, n);
    const int next = mod(i + 1, n);
    emit("partic", {i, prev, next, i}, {next, i, prev, i});
  }

  // Middle exponents k_{i+1}, ..., k_{i-2}: n - 2 of them.
  const auto middle_count = static_cast<std::size_t>(n - 2);
  std::vector<std::vector<int>> middles;
  std::vector<int> ks(middle_count, 0);
  while (true) {
    middles.push_back(ks);
    std::size_t pos = middle_count;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (ks[pos] < k_max) {
        ++ks[pos];
        done = false;
        break;
      }
      ks[pos] = 0;
    }
    if (done) {
      break;
    }
  }

  for (const char* family : {"family1", "family2"}) {
    const bool first = std::string_view(family) == "family1";
    for (int i = 0; i < n; ++i) {
      const int prev = mod(i - 1, n);
      for (const auto& mids : middles) {
        std::vector<int> middle;
        for (std::size_t j = 0; j < middle_count; ++j) {
          append_power(middle, mod(i + 1 + static_cast<int>(j), n), mids[j]);
        }
        for (int m = 0; m <= m_max; ++m) {
          for (int mp = 0; mp <= m_max; ++mp) {
            std::vector<int> lhs;
            std::vector<int> rhs;
            if (first) {
              append_power(lhs, prev, mp);
              append_power(lhs, i, m);
              append_power(rhs, i, m);
              append_power(rhs, prev, mp);
              lhs.insert(lhs.end(), middle.begin(), middle.end());
              rhs.insert(rhs.end(), middle.begin(), middle.end());
              append_power(lhs, prev, m);
              append_power(rhs, prev, m);
            } else {
              append_power(lhs, i, m);
              append_power(rhs, i, m);
              lhs.insert(lhs.end(), middle.begin(), middle.end());
              rhs.insert(rhs.end(), middle.begin(), middle.end());
              append_power(lhs, prev, m);
              append_power(lhs, i, mp);
              append_power(rhs, i, mp);
              append_power(rhs, prev, m);
            }
            emit(family, std::move(lhs), std::move(rhs));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Configuration> configurations_up_to(int n, int max_particles) {
  std::vector<Configuration> out;
  std::vector<int> occ(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int left) {
    if (pos == occ.size()) {
      out.push_back(Configuration{occ, 0});
      return;
    }
    for (int x = 0; x <= left; ++x) {
      occ[pos] = x;
      fill(pos + 1, left - x);
    }
    occ[pos] = 0;
  };
  fill(0, max_particles);
  return out;
}

VerifyResult verify_relation_on_module(const Word& lhs, const Word& rhs, int max_particles) {
  if (lhs.n != rhs.n) {
    throw std::invalid_argument("relation sides have different ranks");
  }
  for (const auto& c : configurations_up_to(lhs.n, max_particles)) {
    if (act_word(lhs, c) != act_word(rhs, c)) {
      return {false, c};
    }
  }
  return {true, std::nullopt};
}

std::string to_string(const Configuration& c) {
  return "(" + partic::join(c.occ, ",") + ") t=" + std::to_string(c.t);
}

std::string to_string(const Word& w) { return partic::join(w.letters, " "); }

std::ostream& operator<<(std::ostream& os, const Configuration& c) { return os << to_string(c); }

}  // namespace partic::affine
