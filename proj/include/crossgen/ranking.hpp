#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossgen/vocab.hpp"

namespace crossgen {

enum class Strategy { LetterIntersections, PebbleSand, None };
enum class SortOrder { Ascending, Descending };

const char* to_string(Strategy s);
const char* to_string(SortOrder o);
std::optional<Strategy> strategy_from_string(const std::string& s);
std::optional<SortOrder> order_from_string(const std::string& s);

std::uint32_t letter_mask(const std::string& word);

// Number of distinct letters the two words share.
int intersection_count(const std::string& a, const std::string& b);

struct IntersectionMatrix {
  std::size_t size = 0;
  std::vector<int> counts;  // size*size, diagonal left at 0 and never read

  static IntersectionMatrix build(const Vocabulary& vocab);

  int at(std::size_t i, std::size_t j) const { return counts[i * size + j]; }
  int row_total(std::size_t i) const;
};

struct RankVector {
  Strategy strategy = Strategy::None;
  std::vector<double> scores;  // parallel to the vocabulary order
};

// Sum over the other words of the distinct shared-letter counts.
RankVector letter_rank(const Vocabulary& vocab);
// Fraction of the vocabulary sharing at least one letter with the word.
RankVector pebble_sand_rank(const Vocabulary& vocab);
// Dispatcher; Strategy::None scores everything 0 so the input order wins.
RankVector rank_words(const Vocabulary& vocab, Strategy strategy);

using Permutation = std::vector<std::string>;

// Stable sort by score; ties keep the vocabulary order.
Permutation sorted_list(const Vocabulary& vocab, const RankVector& ranks, SortOrder order);

// Pebble-and-sand ascending order: the reference permutation for distances.
Permutation best_permutation(const Vocabulary& vocab);

// Normalized positional displacement of p from p_best, where the worst
// permutation is the reverse of p_best. 0 at p_best, 1 at the reverse.
// Requires permutations of the same word set with at least 2 words.
double ps_distance(const Permutation& p, const Permutation& p_best);

}  // namespace crossgen
