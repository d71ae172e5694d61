// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.
//
// argv: <cli-path> <data-dir> <work-dir>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "crossgen/clue.hpp"
#include "crossgen/engine.hpp"
#include "crossgen/experiments.hpp"
#include "crossgen/io.hpp"
#include "oracles.hpp"

using namespace crossgen;

namespace {

std::string g_cli;
std::string g_data = "data";
std::string g_work = "/tmp/crossgen-acceptance";
int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("criterion %2d: %s  %s (%s)\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> pool = load_word_pool(g_data + "/words.txt");
  return pool;
}

double median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// ---------------------------------------------------------------- 1
void criterion_eq1() {
  bool pass = true;

  const Permutation best = {"SH", "IO", "AB"};
  const double d1 = ps_distance({"AB", "SH", "IO"}, best);
  const double d2 = ps_distance({"SH", "AB", "IO"}, best);
  const double d3 = ps_distance({"AB", "IO", "SH"}, best);
  pass = d1 == 1.0 && d2 == 0.5 && d3 == 1.0;
  std::string detail = "hand examples " + std::to_string(d1) + "/" + std::to_string(d2) + "/" +
                       std::to_string(d3);

  Rng vocab_rng(101, 0);
  const Vocabulary vocab = sample_vocabulary(word_pool(), 26, 13, vocab_rng);
  const Permutation reference = vocab.words;
  Permutation reversed = reference;
  std::reverse(reversed.begin(), reversed.end());
  if (ps_distance(reference, reference) != 0.0) pass = false;
  if (ps_distance(reversed, reference) != 1.0) pass = false;
  for (std::size_t n : {3, 4, 5, 6, 7}) {  // odd lengths keep the reverse at exactly 1
    Permutation sub(reference.begin(), reference.begin() + static_cast<std::ptrdiff_t>(n));
    Permutation sub_rev = sub;
    std::reverse(sub_rev.begin(), sub_rev.end());
    if (ps_distance(sub_rev, sub) != 1.0) pass = false;
  }
  Rng rng(77);
  int in_range = 0;
  for (int i = 0; i < 10000; ++i) {
    Permutation p = reference;
    rng.shuffle(p);
    const double d = ps_distance(p, reference);
    if (d >= 0.0 && d <= 1.0) ++in_range;
  }
  if (in_range != 10000) pass = false;
  detail += ", " + std::to_string(in_range) + "/10000 sampled distances in [0,1]";
  report(1, pass, "permutation distance exactness and range properties", detail);
}

// ---------------------------------------------------------------- 2
void criterion_intersection_matrix() {
  const Vocabulary vocab = Vocabulary::from_words({"WROTE", "BREAD", "LOBBY", "HELLO"});
  const IntersectionMatrix m = IntersectionMatrix::build(vocab);
  // distinct-shared-letter counts; BREAD/LOBBY is 1 (both contain B)
  const int expected[4][4] = {{0, 2, 1, 2}, {2, 0, 1, 1}, {1, 1, 0, 2}, {2, 1, 2, 0}};

  auto brute = [&](std::size_t i, std::size_t j) {
    int n = 0;
    for (char c = 'A'; c <= 'Z'; ++c) {
      if (vocab.words[i].find(c) != std::string::npos &&
          vocab.words[j].find(c) != std::string::npos)
        ++n;
    }
    return n;
  };

  bool pass = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      if (m.at(i, j) != brute(i, j)) pass = false;
      if (m.at(i, j) != expected[i][j]) pass = false;
    }
  }
  report(2, pass, "intersection matrix golden values",
         "all entries match the brute-force count; BREAD/LOBBY = " +
             std::to_string(m.at(1, 2)));
}

// ---------------------------------------------------------------- 3
void criterion_goldens() {
  bool pass = true;
  std::string notes;

  {  // pickWord -> HALL
    Grid g(7, 7);
    g = g.write("PICK", {0, 0, Orientation::Across});
    g = g.write("PUSH", {0, 0, Orientation::Down});
    const auto w = pick_word(g, WorkingList{{"HALL", "FRESH", "BUSH", "LAZY"}});
    if (!w || *w != "HALL") pass = false;
    notes += "pickWord=" + w.value_or("none");
  }
  {  // placeable -> false
    Grid g(13, 13);
    g = g.write("BLUE", {0, 0, Orientation::Across});
    g = g.write("BROWN", {0, 0, Orientation::Down});
    if (placeable("HELLO", g)) pass = false;
    notes += ", placeable(HELLO)=false";
  }
  {  // place RED across at (2,0)
    Grid g(5, 5);
    g = g.write("TWO", {0, 0, Orientation::Across});
    g = g.write("THREE", {0, 0, Orientation::Down});
    const Grid placed = place("RED", g);
    const Placement& p = placed.placements().back();
    if (!(p.row == 2 && p.col == 0 && p.orientation == Orientation::Across)) pass = false;
    notes += ", place(RED)@(2,0,across)";
  }
  {  // victim -> APPLE
    Grid g(6, 6);
    g = g.write("APPLE", {1, 0, Orientation::Across});
    g = g.write("CAT", {0, 0, Orientation::Down});
    const auto u = victim(g, WorkingList{{"SINK", "ANT", "PINK", "BUSH"}});
    if (!u || *u != "APPLE") pass = false;
    notes += ", victim=" + u.value_or("none");
  }
  {  // wraparound removes FIVE
    Grid g(5, 5);
    g = g.write("FOUR", {0, 0, Orientation::Across});
    g = g.write("FIVE", {0, 0, Orientation::Down});
    auto [g2, l2] = wraparound(g, WorkingList{{"ONE", "TWO", "THREE"}});
    if (!(g2.placements().size() == 1 && g2.has_word("FOUR") && l2.words.back() == "FIVE"))
      pass = false;
    notes += ", wraparound removes FIVE";
  }
  report(3, pass, "strategic-function goldens", notes);
}

// ---------------------------------------------------------------- 4
void criterion_validity() {
  bool pass = true;
  int runs_done = 0;
  std::string first_issue;
  for (int i = 0; i < 100; ++i) {
    const std::size_t size = 26 + (static_cast<std::size_t>(i) * 74) / 99;
    Rng rng(1000 + i, 0);
    const Vocabulary vocab = sample_vocabulary(word_pool(), size, 12, rng);
    GeneratorConfig cfg;
    cfg.max_iterations = 600;
    cfg.seed = 1000 + static_cast<std::uint64_t>(i);
    cfg.validate_steps = true;
    const GenerationResult res = run_generator(vocab, cfg);
    ++runs_done;
    if (!res.validation_issues.empty()) {
      pass = false;
      if (first_issue.empty()) first_issue = res.validation_issues.front();
    }
    const auto best_issues = res.best.check_invariants(true);
    if (!best_issues.empty()) {
      pass = false;
      if (first_issue.empty()) first_issue = "best grid: " + best_issues.front();
    }
  }
  report(4, pass, "every logged grid valid across 100 seeded runs",
         std::to_string(runs_done) + " runs, vocabularies of 26-100 words" +
             (first_issue.empty() ? "" : "; first issue: " + first_issue));
}

// ---------------------------------------------------------------- 5
void criterion_backtracking_shift() {
  Rng rng(1, 0);
  const Vocabulary vocab = sample_vocabulary(word_pool(), 26, 13, rng);
  PermStudyOptions opt;
  opt.grid_size = 13;
  opt.samples = 500;
  opt.seed = 1;
  opt.iteration_budget = 50;
  const auto brute = perm_brute(vocab, opt, true);
  const auto back = perm_backtrack(vocab, opt, true);

  int violations = 0;
  std::vector<int> wb, wk;
  for (std::size_t i = 0; i < brute.size(); ++i) {
    wb.push_back(brute[i].words_fitted);
    wk.push_back(back[i].words_fitted);
    if (back[i].words_fitted < brute[i].words_fitted) ++violations;
  }
  bool dominated = true;  // first-order dominance of the words-fitted CDF
  for (int k = 0; k <= 26; ++k) {
    const auto cdf = [k](const std::vector<int>& v) {
      return std::count_if(v.begin(), v.end(), [k](int x) { return x <= k; });
    };
    if (cdf(wk) > cdf(wb)) dominated = false;
  }
  const double med_brute = median(wb);
  const double med_back = median(wk);
  const bool pass = dominated && med_back >= med_brute + 2.0 && violations == 0;
  report(5, pass, "backtracking shifts the words-fitted distribution right",
         "median " + std::to_string(med_brute) + " -> " + std::to_string(med_back) +
             ", paired violations " + std::to_string(violations) + ", CDF dominance " +
             (dominated ? "holds" : "broken"));
}

// ---------------------------------------------------------------- 6
void criterion_size_effect() {
  SizeEffectOptions opt;
  opt.max_size = 100;
  opt.grid_size = 13;
  opt.budget = 1500;
  opt.seed = 1;
  const auto rows = size_effect(word_pool(), opt, true);
  int asc = 0, desc = 0, tie = 0;
  for (const auto& r : rows) {
    (r.winner == OrderWinner::Ascending    ? asc
     : r.winner == OrderWinner::Descending ? desc
                                           : tie)++;
  }
  const int asc_or_tie = asc + tie;
  report(6, asc_or_tie >= 85, "pebble-and-sand ascending wins or ties in >= 85/100",
         "asc " + std::to_string(asc) + ", desc " + std::to_string(desc) + ", tie " +
             std::to_string(tie) + " -> " + std::to_string(asc_or_tie) + "/100");
}

// ---------------------------------------------------------------- 7
void criterion_saturation_order() {
  Rng rng(2, 0);
  const Vocabulary vocab = sample_vocabulary(word_pool(), 26, 13, rng);
  const std::uint64_t budget = 30000;
  const auto pa = rank_saturation(vocab, Strategy::PebbleSand, SortOrder::Ascending, 13, budget);
  const auto pd = rank_saturation(vocab, Strategy::PebbleSand, SortOrder::Descending, 13, budget);
  const auto la =
      rank_saturation(vocab, Strategy::LetterIntersections, SortOrder::Ascending, 13, budget);
  const auto ld =
      rank_saturation(vocab, Strategy::LetterIntersections, SortOrder::Descending, 13, budget);
  const bool iter_order = pa.saturation_iteration < pd.saturation_iteration &&
                          pd.saturation_iteration < la.saturation_iteration &&
                          pd.saturation_iteration < ld.saturation_iteration;
  const bool words_order = pa.max_words >= pd.max_words;
  report(7, iter_order && words_order, "saturation ordering pebble-asc < pebble-desc < letter",
         "saturation " + std::to_string(pa.saturation_iteration) + " < " +
             std::to_string(pd.saturation_iteration) + " < " +
             std::to_string(la.saturation_iteration) + "/" +
             std::to_string(ld.saturation_iteration) + "; final words " +
             std::to_string(pa.max_words) + " >= " + std::to_string(pd.max_words));
}

// ---------------------------------------------------------------- 8 + 9
void criteria_scalability_utilization() {
  ScalabilityOptions opt;
  opt.vocab_count = 10;
  opt.vocab_size = 100;
  opt.target_min = 5;
  opt.target_max = 50;
  opt.target_step = 5;
  opt.budget = 20000;
  opt.seed = 1;

  opt.policy = ResetPolicy::Reset;
  const UtilizationResult reset = utilization_study(word_pool(), opt, true);
  opt.policy = ResetPolicy::Continue;
  const UtilizationResult cont = utilization_study(word_pool(), opt, true);

  const auto& rt = reset.by_target;
  const auto& ct = cont.by_target;
  const TargetAggregate& reset50 = rt.back();
  const TargetAggregate& cont50 = ct.back();

  // near-linearity: R^2 of a straight-line fit over targets >= 15
  std::vector<double> xs, ys;
  for (const auto& a : rt) {
    if (a.target >= 15) {
      xs.push_back(a.target);
      ys.push_back(a.mean_iterations);
    }
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;

  const bool mean_ok = reset50.mean_iterations <= 8000.0 && reset50.reached == 10;
  const bool linear_ok = r2 >= 0.85;
  const bool policy_ok = reset50.mean_iterations <= cont50.mean_iterations;
  report(8, mean_ok && linear_ok && policy_ok, "scalability to 50 words",
         "reset mean@50 " + std::to_string(reset50.mean_iterations) + " <=8000 " +
             (mean_ok ? "ok" : "FAIL") + ", R^2 " + std::to_string(r2) + " >=0.85 " +
             (linear_ok ? "ok" : "FAIL") + ", reset<=continue " +
             std::to_string(reset50.mean_iterations) + " vs " +
             std::to_string(cont50.mean_iterations) + " " + (policy_ok ? "ok" : "FAIL"));

  bool band_ok = true;
  double reset_util_sum = 0, cont_util_sum = 0;
  int high_targets = 0;
  std::string bands;
  for (std::size_t i = 0; i < rt.size(); ++i) {
    if (rt[i].target < 40) continue;
    ++high_targets;
    reset_util_sum += rt[i].mean_utilization;
    cont_util_sum += ct[i].mean_utilization;
    if (rt[i].mean_utilization < 0.35 || rt[i].mean_utilization > 0.60) band_ok = false;
    bands += (bands.empty() ? "" : "/") + std::to_string(rt[i].mean_utilization).substr(0, 5);
  }
  const double reset_util = reset_util_sum / high_targets;
  const double cont_util = cont_util_sum / high_targets;
  const bool util_policy_ok = reset_util >= cont_util;
  report(9, band_ok && util_policy_ok, "utilization band for targets >= 40",
         "reset utilization " + bands + " in [0.35,0.60] " + (band_ok ? "ok" : "FAIL") +
             ", reset>=continue " + std::to_string(reset_util) + " vs " +
             std::to_string(cont_util) + " " + (util_policy_ok ? "ok" : "FAIL"));
}

// ---------------------------------------------------------------- 10
void criterion_oracle_equivalence() {
  const std::vector<std::string> pool = {"CAT", "ANT", "TEN", "NET", "RED",
                                         "SUN", "MAT", "TOE", "RAT", "NUT"};
  Rng rng(31337);
  int fixtures = 0;
  int mismatches = 0;
  while (fixtures < 200) {
    const int rows = 5 + static_cast<int>(rng.below(5));
    const int cols = 5 + static_cast<int>(rng.below(5));
    const auto fixture = oracles::random_fixture(rows, cols, pool, 6, rng);
    if (fixture.empty()) continue;
    ++fixtures;
    const Grid g = Grid::from_placements(rows, cols, fixture);

    std::vector<std::string> list;
    for (const std::string& w : pool) {
      if (!g.has_word(w)) list.push_back(w);
    }
    if (list.size() > 6) list.resize(6);

    for (const std::string& probe : list) {
      auto got = g.legal_positions(probe);
      auto want = oracles::legal_positions(probe, rows, cols, fixture);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) ++mismatches;
    }
    if (victim(g, WorkingList{list}) != oracles::victim(rows, cols, fixture, list))
      ++mismatches;
  }
  report(10, mismatches == 0, "legal_positions and victim match brute-force oracles",
         std::to_string(fixtures) + " fixtures, " + std::to_string(mismatches) + " mismatches");
}

// ---------------------------------------------------------------- 11
void criterion_clue_safety() {
  std::vector<std::string> warnings;
  const ClueDictionary dict = ClueDictionary::load_tsv(g_data + "/dictionary.tsv", &warnings);
  int leaks = 0;
  int clues = 0;
  for (const auto& [word, entry] : dict.entries()) {
    for (ClueKind kind : {ClueKind::Definition, ClueKind::UsageBlank}) {
      const Clue clue = make_clue(word, entry, kind);
      ++clues;
      if (contains_substring_ci(clue.text, word)) ++leaks;
    }
  }
  const DictionaryEntry* abysmal = dict.find("ABYSMAL");
  bool verbatim = abysmal != nullptr;
  if (verbatim) {
    verbatim = make_clue("ABYSMAL", *abysmal, ClueKind::Definition).text ==
                   "immeasurably low or wretched : extremely poor or bad" &&
               make_clue("ABYSMAL", *abysmal, ClueKind::UsageBlank).text ==
                   "They were living in _______ ignorance";
  }
  report(11, leaks == 0 && verbatim, "no clue leaks its answer; dictionary examples verbatim",
         std::to_string(clues) + " clues over " + std::to_string(dict.size()) +
             " entries, leaks " + std::to_string(leaks) + ", ABYSMAL " +
             (verbatim ? "verbatim" : "MISMATCH"));
}

// ---------------------------------------------------------------- 12
void criterion_determinism() {
  auto run = [&](const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  auto same = [&](const std::string& a, const std::string& b) {
    return read_text_file(a) == read_text_file(b);
  };

  bool pass = true;
  std::string detail;
  const std::string gen = " generate --vocab " + g_data + "/starter13.txt --seed 7 --out ";
  if (!run(gen + g_work + "/det_a") || !run(gen + g_work + "/det_b")) {
    pass = false;
    detail = "generate failed";
  } else {
    for (const char* name : {"puzzle.json", "runlog.csv", "grid.txt"}) {
      if (!same(g_work + "/det_a/" + name, g_work + "/det_b/" + name)) {
        pass = false;
        detail += std::string(name) + " differs ";
      }
    }
  }
  const std::string exp = " experiment --study perm-backtrack --pool " + g_data +
                          "/words.txt --vocab-size 12 --samples 50 --grid-size 12 --seed 3 "
                          "--budget 40 --out ";
  if (!run(exp + g_work + "/exp_a") || !run(exp + g_work + "/exp_b")) {
    pass = false;
    detail += "experiment failed";
  } else {
    for (const char* name : {"records.csv", "manifest.json"}) {
      if (!same(g_work + "/exp_a/" + name, g_work + "/exp_b/" + name)) {
        pass = false;
        detail += std::string(name) + " differs ";
      }
    }
  }
  if (detail.empty()) detail = "generate and experiment outputs byte-identical";
  report(12, pass, "seeded CLI runs reproduce byte-identical outputs", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  if (argc > 2) g_data = argv[2];
  if (argc > 3) g_work = argv[3];
  if (std::system(("mkdir -p " + g_work).c_str()) != 0) return 2;

  criterion_eq1();
  criterion_intersection_matrix();
  criterion_goldens();
  criterion_validity();
  criterion_backtracking_shift();
  criterion_size_effect();
  criterion_saturation_order();
  criteria_scalability_utilization();
  criterion_oracle_equivalence();
  criterion_clue_safety();
  criterion_determinism();

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
