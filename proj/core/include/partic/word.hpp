#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partic {

// Number of lattice positions N; the generators are a_1, ..., a_{N-1}.
class Rank {
 public:
  explicit Rank(int n);

  [[nodiscard]] int value() const noexcept { return n_; }
  [[nodiscard]] int generators() const noexcept { return n_ - 1; }

  friend auto operator<=>(const Rank&, const Rank&) = default;

 private:
  int n_;
};

// Occurrence count of each generator, indexed by generator (1 ... N-1).
class MultiDegree {
 public:
  explicit MultiDegree(Rank rank);
  MultiDegree(Rank rank, std::vector<int> counts);

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  [[nodiscard]] int operator[](int generator) const { return counts_.at(generator - 1); }
  [[nodiscard]] std::span<const int> counts() const noexcept { return counts_; }
  [[nodiscard]] int total() const noexcept;

  // Degree plus the unit vector e_generator.
  [[nodiscard]] MultiDegree plus_generator(int generator) const;
  // True iff all counts are equal (the degrees r * (1, ..., 1)).
  [[nodiscard]] bool is_diagonal() const noexcept;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  Rank rank_;
  std::vector<int> counts_;
};

// A monomial of the free algebra: a sequence of generator indices in [1, N-1].
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}
  Word(Rank rank, std::vector<int> letters);
  Word(Rank rank, std::initializer_list<int> letters)
      : Word(rank, std::vector<int>(letters)) {}

  [[nodiscard]] Rank rank() const noexcept { return rank_; }
  [[nodiscard]] std::span<const int> letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  [[nodiscard]] Word concat(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Rank rank_;
  std::vector<int> letters_;
};

[[nodiscard]] MultiDegree multidegree(const Word& w);

// Every word of length <= max_len over the generators of `rank`, shortlex order.
[[nodiscard]] std::vector<Word> all_words(Rank rank, int max_len);

// Every word of the given multidegree, in lexicographic order.
[[nodiscard]] std::vector<Word> words_of_degree(const MultiDegree& degree);

// Every multidegree with total degree <= max_total, in lexicographic order.
[[nodiscard]] std::vector<MultiDegree> degrees_up_to(Rank rank, int max_total);

// Comma- and/or whitespace-separated nonnegative integers. Throws
// std::invalid_argument on anything else.
[[nodiscard]] std::vector<int> parse_int_list(std::string_view text);

[[nodiscard]] Word parse_word(Rank rank, std::string_view text);
[[nodiscard]] MultiDegree parse_degree(Rank rank, std::string_view text);

[[nodiscard]] std::string join(std::span<const int> values, std::string_view sep);

[[nodiscard]] std::string to_string(const Word& w);
[[nodiscard]] std::string to_string(const MultiDegree& d);
std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const MultiDegree& d);

}  // namespace partic
