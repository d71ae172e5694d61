#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crossgen/engine.hpp"
#include "crossgen/ranking.hpp"
#include "crossgen/vocab.hpp"

namespace crossgen {

// Runs body(0..n-1). The serial path is the reference implementation; the
// parallel path fans the indices out over OpenMP workers. Each index writes
// only its own slot, so both paths produce identical results.
void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body);

int worker_count();  // 1 when built without OpenMP

struct ExperimentRecord {
  std::uint64_t perm_id = 0;
  int words_fitted = 0;
  double distance = 0.0;  // D(P) from the pebble-and-sand best permutation
  std::uint64_t iterations = 0;
  int grid_size = 0;
  double utilization = 0.0;
};

struct PermStudyOptions {
  int grid_size = 13;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::uint64_t iteration_budget = 50;  // backtracking only; 0 degenerates to brute
  bool exhaustive = false;              // enumerate all n! permutations (n <= 10)
};

// Greedy placement in permutation order with no ranking and no backtracking,
// on a fixed grid, until no remaining word fits.
std::vector<ExperimentRecord> perm_brute(const Vocabulary& vocab, const PermStudyOptions& opt,
                                         bool parallel = true);

// Same sampling, with LIFO + victim backtracking under an iteration budget.
std::vector<ExperimentRecord> perm_backtrack(const Vocabulary& vocab,
                                             const PermStudyOptions& opt, bool parallel = true);

struct SaturationResult {
  std::vector<int> words_per_iteration;   // words in the grid after iteration i+1
  std::uint64_t saturation_iteration = 0; // first iteration reaching the final max
  int max_words = 0;
  std::uint64_t iterations = 0;
};

// Single long run on a fixed grid with LIFO backtracking; stops early once
// the best has not moved for 20% of max_iter.
SaturationResult rank_saturation(const Vocabulary& vocab, Strategy strategy, SortOrder order,
                                 int grid_size, std::uint64_t max_iter);

enum class OrderWinner { Ascending, Descending, Tie };
const char* to_string(OrderWinner w);

struct SizeEffectRow {
  int size = 0;
  int asc_words = 0;
  int desc_words = 0;
  OrderWinner winner = OrderWinner::Tie;
};

struct SizeEffectOptions {
  int max_size = 100;
  int grid_size = 13;
  std::uint64_t budget = 1500;
  std::uint64_t seed = 1;
};

// One random vocabulary per size; pebble-and-sand ascending vs descending
// on a fixed grid with both backtracking strategies.
std::vector<SizeEffectRow> size_effect(const std::vector<std::string>& pool,
                                       const SizeEffectOptions& opt, bool parallel = true);

struct HistogramBin {
  double low = 0.0;
  double high = 0.0;
  std::uint64_t count = 0;
};

// Distribution of D(P) over sampled permutations.
std::vector<HistogramBin> distance_distribution(const Vocabulary& vocab, std::uint64_t samples,
                                                std::uint64_t seed, int bins, bool parallel = true);

struct ContourSurface {
  int distance_bins = 0;
  int max_words = 0;
  std::vector<std::uint64_t> counts;  // distance_bins x (max_words + 1)

  std::uint64_t at(int d_bin, int words) const {
    return counts[static_cast<std::size_t>(d_bin) * (max_words + 1) + words];
  }
};

ContourSurface contour(const std::vector<ExperimentRecord>& records, int distance_bins = 20);

struct ScalabilityOptions {
  int vocab_count = 10;
  int vocab_size = 100;
  int target_min = 5;
  int target_max = 50;
  int target_step = 5;
  ResetPolicy policy = ResetPolicy::Reset;
  std::uint64_t budget = 20000;
  std::uint64_t seed = 1;
  std::size_t max_word_length = 12;
};

struct TargetAggregate {
  int target = 0;
  std::uint64_t min_iterations = 0;
  double mean_iterations = 0.0;  // unreached runs count at the full budget
  std::uint64_t max_iterations = 0;
  int reached = 0;               // datasets that hit the target
  double mean_utilization = 0.0; // over reached datasets
  double mean_grid_size = 0.0;   // over reached datasets
};

// Full generator runs per dataset; per-target numbers come from the first
// iteration at which the running best reached that many words.
std::vector<TargetAggregate> scalability(const std::vector<std::string>& pool,
                                         const ScalabilityOptions& opt, bool parallel = true);

struct SizeUtilization {
  int grid_size = 0;
  double mean_utilization = 0.0;
  int count = 0;
};

struct UtilizationResult {
  std::vector<TargetAggregate> by_target;
  std::vector<SizeUtilization> by_size;
};

UtilizationResult utilization_study(const std::vector<std::string>& pool,
                                    const ScalabilityOptions& opt, bool parallel = true);

}  // namespace crossgen
