#include "crossgen/ranking.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace crossgen {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::LetterIntersections: return "letter";
    case Strategy::PebbleSand: return "pebble";
    case Strategy::None: return "none";
  }
  return "none";
}

const char* to_string(SortOrder o) {
  return o == SortOrder::Ascending ? "asc" : "desc";
}

std::optional<Strategy> strategy_from_string(const std::string& s) {
  if (s == "letter") return Strategy::LetterIntersections;
  if (s == "pebble") return Strategy::PebbleSand;
  if (s == "none") return Strategy::None;
  return std::nullopt;
}

std::optional<SortOrder> order_from_string(const std::string& s) {
  if (s == "asc") return SortOrder::Ascending;
  if (s == "desc") return SortOrder::Descending;
  return std::nullopt;
}

std::uint32_t letter_mask(const std::string& word) {
  std::uint32_t mask = 0;
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') mask |= 1u << (c - 'A');
  }
  return mask;
}

int intersection_count(const std::string& a, const std::string& b) {
  return std::popcount(letter_mask(a) & letter_mask(b));
}

IntersectionMatrix IntersectionMatrix::build(const Vocabulary& vocab) {
  IntersectionMatrix m;
  m.size = vocab.size();
  m.counts.assign(m.size * m.size, 0);
  std::vector<std::uint32_t> masks(m.size);
  for (std::size_t i = 0; i < m.size; ++i) masks[i] = letter_mask(vocab.words[i]);
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = i + 1; j < m.size; ++j) {
      const int c = std::popcount(masks[i] & masks[j]);
      m.counts[i * m.size + j] = c;
      m.counts[j * m.size + i] = c;
    }
  }
  return m;
}

int IntersectionMatrix::row_total(std::size_t i) const {
  int total = 0;
  for (std::size_t j = 0; j < size; ++j) {
    if (j != i) total += at(i, j);
  }
  return total;
}

RankVector letter_rank(const Vocabulary& vocab) {
  const IntersectionMatrix m = IntersectionMatrix::build(vocab);
  RankVector r{Strategy::LetterIntersections, {}};
  r.scores.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    r.scores.push_back(static_cast<double>(m.row_total(i)));
  }
  return r;
}

RankVector pebble_sand_rank(const Vocabulary& vocab) {
  RankVector r{Strategy::PebbleSand, {}};
  const std::size_t n = vocab.size();
  std::vector<std::uint32_t> masks(n);
  for (std::size_t i = 0; i < n; ++i) masks[i] = letter_mask(vocab.words[i]);
  for (std::size_t i = 0; i < n; ++i) {
    int hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && (masks[i] & masks[j]) != 0) ++hits;
    }
    r.scores.push_back(static_cast<double>(hits) / static_cast<double>(n));
  }
  return r;
}

RankVector rank_words(const Vocabulary& vocab, Strategy strategy) {
  switch (strategy) {
    case Strategy::LetterIntersections: return letter_rank(vocab);
    case Strategy::PebbleSand: return pebble_sand_rank(vocab);
    case Strategy::None: break;
  }
  return RankVector{Strategy::None, std::vector<double>(vocab.size(), 0.0)};
}

Permutation sorted_list(const Vocabulary& vocab, const RankVector& ranks, SortOrder order) {
  if (ranks.scores.size() != vocab.size())
    throw std::invalid_argument("rank vector does not cover the vocabulary");
  std::vector<std::size_t> idx(vocab.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order == SortOrder::Ascending ? ranks.scores[a] < ranks.scores[b]
                                         : ranks.scores[a] > ranks.scores[b];
  });
  Permutation out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(vocab.words[i]);
  return out;
}

Permutation best_permutation(const Vocabulary& vocab) {
  return sorted_list(vocab, pebble_sand_rank(vocab), SortOrder::Ascending);
}

double ps_distance(const Permutation& p, const Permutation& p_best) {
  const std::size_t n = p_best.size();
  if (n < 2) throw std::invalid_argument("ps_distance needs at least 2 words");
  if (p.size() != n) throw std::invalid_argument("permutations differ in size");
  std::unordered_map<std::string, std::size_t> pos;
  pos.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pos[p[i]] = i;
  if (pos.size() != n) throw std::invalid_argument("permutation contains duplicates");

  long long numerator = 0;
  long long denominator = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = pos.find(p_best[i]);
    if (it == pos.end())
      throw std::invalid_argument("permutations are over different word sets");
    const long long best_pos = static_cast<long long>(i);
    const long long worst_pos = static_cast<long long>(n - 1 - i);
    numerator += std::llabs(static_cast<long long>(it->second) - best_pos);
    denominator += std::llabs(worst_pos - best_pos);
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace crossgen
