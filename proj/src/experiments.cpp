#include "crossgen/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crossgen {

void for_each_index(std::size_t n, bool parallel, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  if (parallel) {
    #pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

const char* to_string(OrderWinner w) {
  switch (w) {
    case OrderWinner::Ascending: return "asc";
    case OrderWinner::Descending: return "desc";
    case OrderWinner::Tie: return "tie";
  }
  return "tie";
}

namespace {

// i-th permutation of 0..n-1 in factoradic order; used when enumerating all
// n! orders exhaustively.
std::vector<std::size_t> nth_permutation(std::size_t n, std::uint64_t index) {
  std::vector<std::uint64_t> factorial(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = factorial[i - 1];
    const std::size_t pick = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::uint64_t factorial_checked(std::size_t n) {
  if (n > 10) throw std::invalid_argument("exhaustive enumeration limited to 10 words");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation sample_permutation(const Vocabulary& vocab, const PermStudyOptions& opt,
                               std::uint64_t id) {
  if (opt.exhaustive) {
    Permutation p;
    p.reserve(vocab.size());
    for (std::size_t i : nth_permutation(vocab.size(), id)) p.push_back(vocab.words[i]);
    return p;
  }
  Permutation p = vocab.words;
  Rng rng(opt.seed, id);
  rng.shuffle(p);
  return p;
}

std::vector<ExperimentRecord> run_perm_study(const Vocabulary& vocab,
                                             const PermStudyOptions& opt, bool backtrack,
                                             bool parallel) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  if (static_cast<int>(vocab.longest()) > opt.grid_size) {
    throw std::invalid_argument("longest word does not fit the study grid");
  }
  const std::uint64_t samples =
      opt.exhaustive ? factorial_checked(vocab.size()) : opt.samples;
  if (samples == 0) throw std::invalid_argument("sample count must be positive");

  const Permutation reference = best_permutation(vocab);
  std::vector<ExperimentRecord> records(samples);

  for_each_index(static_cast<std::size_t>(samples), parallel, [&](std::size_t id) {
    const Permutation perm = sample_permutation(vocab, opt, id);
    Vocabulary ordered;
    ordered.words = perm;

    GeneratorConfig cfg;
    cfg.strategy = Strategy::None;  // keep the permutation order
    cfg.ge_max = 0;                 // fixed grid
    cfg.initial_grid = opt.grid_size;
    cfg.seed = opt.seed;
    const bool with_backtracking = backtrack && opt.iteration_budget > 0;
    cfg.enable_victim = with_backtracking;
    cfg.enable_wrap = with_backtracking;
    // Brute placement runs until nothing fits; the iteration cap only binds
    // when backtracking can keep the loop alive forever.
    cfg.max_iterations =
        with_backtracking ? opt.iteration_budget : 4 * static_cast<std::uint64_t>(vocab.size());

    const GenerationResult res = run_generator(ordered, cfg);
    ExperimentRecord rec;
    rec.perm_id = id;
    rec.words_fitted = res.n_best;
    rec.distance = vocab.size() >= 2 ? ps_distance(perm, reference) : 0.0;
    rec.iterations = res.iterations;
    rec.grid_size = opt.grid_size;
    rec.utilization = res.best.utilization();
    records[id] = rec;
  });
  return records;
}

}  // namespace

std::vector<ExperimentRecord> perm_brute(const Vocabulary& vocab, const PermStudyOptions& opt,
                                         bool parallel) {
  return run_perm_study(vocab, opt, false, parallel);
}

std::vector<ExperimentRecord> perm_backtrack(const Vocabulary& vocab,
                                             const PermStudyOptions& opt, bool parallel) {
  return run_perm_study(vocab, opt, true, parallel);
}

SaturationResult rank_saturation(const Vocabulary& vocab, Strategy strategy, SortOrder order,
                                 int grid_size, std::uint64_t max_iter) {
  GeneratorConfig cfg;
  cfg.strategy = strategy;
  cfg.order = order;
  cfg.ge_max = 0;  // fixed grid
  cfg.initial_grid = grid_size;
  cfg.max_iterations = max_iter;
  cfg.enable_victim = false;  // LIFO backtracking only
  cfg.enable_wrap = true;
  cfg.stall_window = std::max<std::uint64_t>(1, max_iter / 5);

  const GenerationResult res = run_generator(vocab, cfg);
  SaturationResult out;
  out.iterations = res.iterations;
  out.max_words = res.n_best;
  out.words_per_iteration.reserve(res.log.size());
  for (const RunLogEntry& e : res.log) out.words_per_iteration.push_back(e.n_words);
  out.saturation_iteration = res.milestones.empty() ? 0 : res.milestones.back().iteration;
  return out;
}

std::vector<SizeEffectRow> size_effect(const std::vector<std::string>& pool,
                                       const SizeEffectOptions& opt, bool parallel) {
  std::vector<SizeEffectRow> rows(static_cast<std::size_t>(opt.max_size));
  for_each_index(rows.size(), parallel, [&](std::size_t idx) {
    const int size = static_cast<int>(idx) + 1;
    Rng rng(opt.seed, static_cast<std::uint64_t>(size));
    const Vocabulary vocab = sample_vocabulary(pool, static_cast<std::size_t>(size),
                                               static_cast<std::size_t>(opt.grid_size), rng);
    auto best_words = [&](SortOrder order) {
      GeneratorConfig cfg;
      cfg.strategy = Strategy::PebbleSand;
      cfg.order = order;
      cfg.ge_max = 0;  // fixed grid
      cfg.initial_grid = opt.grid_size;
      cfg.max_iterations = opt.budget;
      // both backtracking strategies, with a long tenure so the search digs
      // well below the most recent placements
      cfg.enable_victim = true;
      cfg.enable_wrap = true;
      cfg.tabu_tenure = std::max(2, size / 2);
      cfg.stall_window = std::max<std::uint64_t>(1, opt.budget / 5);
      return run_generator(vocab, cfg).n_best;
    };
    SizeEffectRow row;
    row.size = size;
    row.asc_words = best_words(SortOrder::Ascending);
    row.desc_words = best_words(SortOrder::Descending);
    row.winner = row.asc_words > row.desc_words   ? OrderWinner::Ascending
                 : row.asc_words < row.desc_words ? OrderWinner::Descending
                                                  : OrderWinner::Tie;
    rows[idx] = row;
  });
  return rows;
}

std::vector<HistogramBin> distance_distribution(const Vocabulary& vocab, std::uint64_t samples,
                                                std::uint64_t seed, int bins, bool parallel) {
  if (vocab.size() < 2) throw std::invalid_argument("need at least 2 words");
  if (bins < 1) throw std::invalid_argument("need at least 1 bin");
  const Permutation reference = best_permutation(vocab);
  std::vector<double> distances(samples);
  for_each_index(static_cast<std::size_t>(samples), parallel, [&](std::size_t id) {
    Permutation p = vocab.words;
    Rng rng(seed, id);
    rng.shuffle(p);
    distances[id] = ps_distance(p, reference);
  });

  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out[static_cast<std::size_t>(b)].low = static_cast<double>(b) / bins;
    out[static_cast<std::size_t>(b)].high = static_cast<double>(b + 1) / bins;
  }
  for (double d : distances) {
    const int b = std::min(bins - 1, static_cast<int>(d * bins));
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

ContourSurface contour(const std::vector<ExperimentRecord>& records, int distance_bins) {
  if (records.empty()) throw std::invalid_argument("no records to bin");
  ContourSurface surface;
  surface.distance_bins = distance_bins;
  surface.max_words = 0;
  for (const ExperimentRecord& r : records) {
    surface.max_words = std::max(surface.max_words, r.words_fitted);
  }
  surface.counts.assign(
      static_cast<std::size_t>(distance_bins) * (surface.max_words + 1), 0);
  for (const ExperimentRecord& r : records) {
    const int b = std::min(distance_bins - 1, static_cast<int>(r.distance * distance_bins));
    ++surface.counts[static_cast<std::size_t>(b) * (surface.max_words + 1) + r.words_fitted];
  }
  return surface;
}

namespace {

struct DatasetOutcome {
  // per requested target: first-hit iteration (budget when unreached),
  // whether reached, utilization and grid size at the hit
  std::vector<std::uint64_t> iterations;
  std::vector<bool> reached;
  std::vector<double> utilization;
  std::vector<int> grid_size;
};

std::vector<int> study_targets(const ScalabilityOptions& opt) {
  std::vector<int> targets;
  for (int t = opt.target_min; t <= opt.target_max; t += opt.target_step) targets.push_back(t);
  if (targets.empty()) throw std::invalid_argument("empty target range");
  return targets;
}

std::vector<DatasetOutcome> run_scalability_datasets(const std::vector<std::string>& pool,
                                                     const ScalabilityOptions& opt,
                                                     bool parallel) {
  const std::vector<int> targets = study_targets(opt);
  if (opt.target_max > opt.vocab_size) {
    throw std::invalid_argument("target exceeds vocabulary size");
  }
  std::vector<DatasetOutcome> outcomes(static_cast<std::size_t>(opt.vocab_count));
  for_each_index(outcomes.size(), parallel, [&](std::size_t d) {
    Rng rng(opt.seed, d);
    const Vocabulary vocab = sample_vocabulary(pool, static_cast<std::size_t>(opt.vocab_size),
                                               opt.max_word_length, rng);
    GeneratorConfig cfg;
    cfg.strategy = Strategy::PebbleSand;
    cfg.order = SortOrder::Ascending;
    cfg.reset_policy = opt.policy;
    cfg.ge_max = 500;
    cfg.max_iterations = opt.budget;
    cfg.target_words = opt.target_max;
    cfg.seed = opt.seed + d;

    const GenerationResult res = run_generator(vocab, cfg);

    DatasetOutcome outcome;
    outcome.iterations.assign(targets.size(), opt.budget);
    outcome.reached.assign(targets.size(), false);
    outcome.utilization.assign(targets.size(), 0.0);
    outcome.grid_size.assign(targets.size(), 0);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (const Milestone& m : res.milestones) {
        if (m.words >= targets[t]) {
          outcome.iterations[t] = m.iteration;
          outcome.reached[t] = true;
          outcome.utilization[t] = m.utilization;
          outcome.grid_size[t] = m.grid_size;
          break;
        }
      }
    }
    outcomes[d] = std::move(outcome);
  });
  return outcomes;
}

std::vector<TargetAggregate> aggregate_targets(const std::vector<DatasetOutcome>& outcomes,
                                               const std::vector<int>& targets) {
  std::vector<TargetAggregate> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    TargetAggregate agg;
    agg.target = targets[t];
    agg.min_iterations = UINT64_MAX;
    double iter_sum = 0.0;
    double util_sum = 0.0;
    double size_sum = 0.0;
    for (const DatasetOutcome& o : outcomes) {
      const std::uint64_t iters = o.iterations[t];
      agg.min_iterations = std::min(agg.min_iterations, iters);
      agg.max_iterations = std::max(agg.max_iterations, iters);
      iter_sum += static_cast<double>(iters);
      if (o.reached[t]) {
        ++agg.reached;
        util_sum += o.utilization[t];
        size_sum += o.grid_size[t];
      }
    }
    agg.mean_iterations = iter_sum / static_cast<double>(outcomes.size());
    if (agg.reached > 0) {
      agg.mean_utilization = util_sum / agg.reached;
      agg.mean_grid_size = size_sum / agg.reached;
    }
    out.push_back(agg);
  }
  return out;
}

}  // namespace

std::vector<TargetAggregate> scalability(const std::vector<std::string>& pool,
                                         const ScalabilityOptions& opt, bool parallel) {
  return aggregate_targets(run_scalability_datasets(pool, opt, parallel), study_targets(opt));
}

UtilizationResult utilization_study(const std::vector<std::string>& pool,
                                    const ScalabilityOptions& opt, bool parallel) {
  const std::vector<int> targets = study_targets(opt);
  const std::vector<DatasetOutcome> outcomes = run_scalability_datasets(pool, opt, parallel);
  UtilizationResult result;
  result.by_target = aggregate_targets(outcomes, targets);

  std::map<int, std::pair<double, int>> by_size;  // grid size -> (sum, count)
  for (const DatasetOutcome& o : outcomes) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!o.reached[t]) continue;
      auto& [sum, count] = by_size[o.grid_size[t]];
      sum += o.utilization[t];
      ++count;
    }
  }
  for (const auto& [size, entry] : by_size) {
    result.by_size.push_back(SizeUtilization{size, entry.first / entry.second, entry.second});
  }
  return result;
}

}  // namespace crossgen
