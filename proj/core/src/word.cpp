#include "partic/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partic {

Rank::Rank(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("rank N must be >= 3, got " + std::to_string(n));
  }
}

MultiDegree::MultiDegree(Rank rank)
    : rank_(rank), counts_(static_cast<std::size_t>(rank.generators()), 0) {}

MultiDegree::MultiDegree(Rank rank, std::vector<int> counts)
    : rank_(rank), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(rank.generators())) {
    throw std::invalid_argument("multidegree for N=" + std::to_string(rank.value()) +
                                " needs " + std::to_string(rank.generators()) +
                                " entries, got " + std::to_string(counts_.size()));
  }
  if (std::any_of(counts_.begin(), counts_.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("multidegree entries must be nonnegative");
  }
}

int MultiDegree::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

MultiDegree MultiDegree::plus_generator(int generator) const {
  if (generator < 1 || generator > rank_.generators()) {
    throw std::out_of_range("generator index " + std::to_string(generator) +
                            " out of range for N=" + std::to_string(rank_.value()));
  }
  auto counts = counts_;
  ++counts[static_cast<std::size_t>(generator - 1)];
  return MultiDegree(rank_, std::move(counts));
}

bool MultiDegree::is_diagonal() const noexcept {
  return std::adjacent_find(counts_.begin(), counts_.end(), std::not_equal_to<>()) ==
         counts_.end();
}

Word::Word(Rank rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  for (int a : letters_) {
    if (a < 1 || a > rank_.generators()) {
      throw std::invalid_argument("letter " + std::to_string(a) + " out of range [1, " +
                                  std::to_string(rank_.generators()) + "]");
    }
  }
}

Word Word::concat(const Word& other) const {
  if (rank_ != other.rank_) {
    throw std::invalid_argument("rank mismatch in word concatenation");
  }
  auto letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(rank_, std::move(letters));
}

MultiDegree multidegree(const Word& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.rank().generators()), 0);
  for (int a : w.letters()) {
    ++counts[static_cast<std::size_t>(a - 1)];
  }
  return MultiDegree(w.rank(), std::move(counts));
}

std::vector<Word> all_words(Rank rank, int max_len) {
  std::vector<Word> out;
  const int g = rank.generators();
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> letters(static_cast<std::size_t>(len), 1);
    while (true) {
      out.emplace_back(rank, letters);
      int pos = len - 1;
      while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == g) {
        letters[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++letters[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

std::vector<Word> words_of_degree(const MultiDegree& degree) {
  std::vector<int> letters;
  for (int a = 1; a <= degree.rank().generators(); ++a) {
    letters.insert(letters.end(), static_cast<std::size_t>(degree[a]), a);
  }
  std::vector<Word> out;
  do {
    out.emplace_back(degree.rank(), letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<MultiDegree> degrees_up_to(Rank rank, int max_total) {
  std::vector<MultiDegree> out;
  const auto g = static_cast<std::size_t>(rank.generators());
  std::vector<int> counts(g, 0);
  // odometer over counts with the total bounded, last entry fastest
  while (true) {
    out.emplace_back(rank, counts);
    std::size_t pos = g;
    while (pos > 0) {
      --pos;
      ++counts[pos];
      if (std::accumulate(counts.begin(), counts.end(), 0) <= max_total) {
        break;
      }
      counts[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
  }
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) {
      ++j;
    }
    const auto token = text.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw std::invalid_argument("malformed integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

Word parse_word(Rank rank, std::string_view text) {
  return Word(rank, parse_int_list(text));
}

MultiDegree parse_degree(Rank rank, std::string_view text) {
  return MultiDegree(rank, parse_int_list(text));
}

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_string(const Word& w) { return join(w.letters(), " "); }

std::string to_string(const MultiDegree& d) { return "(" + join(d.counts(), ",") + ")"; }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << "[" << join(w.letters(), ",") << "]"; }

std::ostream& operator<<(std::ostream& os, const MultiDegree& d) { return os << to_string(d); }

}  // namespace partic
