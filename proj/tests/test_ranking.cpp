#include "crossgen/ranking.hpp"

#include <algorithm>

#include "test_support.hpp"

using namespace crossgen;
using testsup::expect;
using testsup::expect_eq;
using testsup::expect_near;

namespace {

Vocabulary table_vocab() {
  return Vocabulary::from_words({"WROTE", "BREAD", "LOBBY", "HELLO"});
}

// distinct-shared-letter count, spelled out the slow way
int slow_intersections(const std::string& a, const std::string& b) {
  int n = 0;
  for (char c = 'A'; c <= 'Z'; ++c) {
    if (a.find(c) != std::string::npos && b.find(c) != std::string::npos) ++n;
  }
  return n;
}

void test_intersection_count() {
  expect_eq(intersection_count("WROTE", "BREAD"), 2, "WROTE/BREAD share R and E");
  expect_eq(intersection_count("HELLO", "LOBBY"), 2, "HELLO/LOBBY share L and O");
  expect_eq(intersection_count("WROTE", "WROTE"), 5, "self-pair counts distinct letters");
  expect_eq(intersection_count("AB", "CD"), 0, "disjoint words share nothing");
  expect_eq(intersection_count("BREAD", "LOBBY"), 1, "BREAD/LOBBY share B");
}

void test_matrix() {
  const Vocabulary v = table_vocab();
  const IntersectionMatrix m = IntersectionMatrix::build(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j) continue;
      expect_eq(m.at(i, j), slow_intersections(v.words[i], v.words[j]),
                "matrix matches the brute-force check");
      expect_eq(m.at(i, j), m.at(j, i), "matrix is symmetric");
      const int cap = std::min(slow_intersections(v.words[i], v.words[i]),
                               slow_intersections(v.words[j], v.words[j]));
      expect(m.at(i, j) <= cap, "entry bounded by the smaller distinct-letter set");
    }
  }
}

void test_letter_rank() {
  const RankVector r = letter_rank(table_vocab());
  expect_near(r.scores[0], 5.0, 1e-12, "WROTE totals 5");
  expect_near(r.scores[3], 5.0, 1e-12, "HELLO totals 5");
  expect_near(r.scores[1], 4.0, 1e-12, "BREAD totals 4 (shares B with LOBBY)");
  expect_near(r.scores[2], 4.0, 1e-12, "LOBBY totals 4");

  const RankVector solo = letter_rank(Vocabulary::from_words({"ALONE"}));
  expect_near(solo.scores[0], 0.0, 1e-12, "single word scores 0");
  const RankVector disjoint = letter_rank(Vocabulary::from_words({"AB", "CD"}));
  expect_near(disjoint.scores[0], 0.0, 1e-12, "disjoint pair scores 0");
  expect_near(disjoint.scores[1], 0.0, 1e-12, "disjoint pair scores 0");
}

void test_pebble_rank() {
  const RankVector r = pebble_sand_rank(table_vocab());
  expect_near(r.scores[0], 3.0 / 4.0, 1e-12, "WROTE intersects all three others");
  const RankVector solo = pebble_sand_rank(Vocabulary::from_words({"ALONE"}));
  expect_near(solo.scores[0], 0.0, 1e-12, "single word scores 0");
  const RankVector disjoint = pebble_sand_rank(Vocabulary::from_words({"AB", "CD"}));
  expect_near(disjoint.scores[0], 0.0, 1e-12, "disjoint words score 0");

  for (double s : r.scores) {
    expect(s >= 0.0 && s <= 3.0 / 4.0, "pebble scores stay in [0, (n-1)/n]");
  }
}

void test_sorted_list() {
  const Vocabulary v = table_vocab();
  const Permutation desc = sorted_list(v, letter_rank(v), SortOrder::Descending);
  const Permutation want = {"WROTE", "HELLO", "BREAD", "LOBBY"};
  expect(desc == want, "descending letter ranking orders WROTE, HELLO, BREAD, LOBBY");

  // all-equal scores keep the input order
  const Vocabulary flat = Vocabulary::from_words({"ZED", "YAK", "XRAY"});
  const RankVector zeros{Strategy::None, {0.0, 0.0, 0.0}};
  expect(sorted_list(flat, zeros, SortOrder::Ascending) == flat.words,
         "stable sort keeps input order on ties");

  // distinct scores: ascending is the reverse of descending
  const Vocabulary mix = Vocabulary::from_words({"ALPHA", "BRAVO", "CIVIC"});
  const RankVector ranks{Strategy::None, {2.0, 0.0, 1.0}};
  Permutation asc = sorted_list(mix, ranks, SortOrder::Ascending);
  std::reverse(asc.begin(), asc.end());
  expect(asc == sorted_list(mix, ranks, SortOrder::Descending),
         "ascending reverses descending when scores are distinct");

  // multiset preserved
  Permutation p = sorted_list(v, pebble_sand_rank(v), SortOrder::Ascending);
  std::sort(p.begin(), p.end());
  Permutation w = v.words;
  std::sort(w.begin(), w.end());
  expect(p == w, "sorted_list is a permutation of the vocabulary");
}

void test_ps_distance() {
  const Permutation best = {"SH", "IO", "AB"};
  expect_near(ps_distance({"AB", "SH", "IO"}, best), 1.0, 1e-12, "(2+1+1)/4 = 1");
  expect_near(ps_distance({"SH", "AB", "IO"}, best), 0.5, 1e-12, "distance 0.5");
  expect_near(ps_distance({"AB", "IO", "SH"}, best), 1.0, 1e-12, "second 100% example");
  expect_near(ps_distance(best, best), 0.0, 1e-12, "identity distance");

  bool threw = false;
  try {
    ps_distance({"SH", "IO", "XY"}, best);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "mismatched word sets throw");
}

void test_ps_distance_properties() {
  Rng rng(11);
  const std::vector<std::size_t> sizes = {2, 3, 4, 5, 7, 8, 11};
  for (std::size_t n : sizes) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; ++i) {
      words.push_back(std::string("W") + static_cast<char>('A' + i));
    }
    const Permutation best = words;
    Permutation worst = words;
    std::reverse(worst.begin(), worst.end());
    expect_near(ps_distance(best, best), 0.0, 1e-12, "D(P_best) = 0");
    expect_near(ps_distance(worst, best), 1.0, 1e-12, "D(P_worst) = 1, odd or even length");
    for (int trial = 0; trial < 300; ++trial) {
      Permutation p = words;
      rng.shuffle(p);
      const double d = ps_distance(p, best);
      expect(d >= 0.0 && d <= 1.0, "D(P) stays within [0,1]");
    }
  }
}

}  // namespace

int main() {
  test_intersection_count();
  test_matrix();
  test_letter_rank();
  test_pebble_rank();
  test_sorted_list();
  test_ps_distance();
  test_ps_distance_properties();
  return testsup::finish("test_ranking");
}
