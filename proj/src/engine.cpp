#include "crossgen/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace crossgen {

void WorkingList::erase(const std::string& word) {
  auto it = std::find(words.begin(), words.end(), word);
  if (it != words.end()) words.erase(it);
}

namespace {

void push_bounded(std::deque<std::pair<std::string, std::uint64_t>>& entries,
                  const std::string& word, std::uint64_t frees_up_at, std::size_t cap) {
  entries.emplace_back(word, frees_up_at);
  while (entries.size() > cap) entries.pop_front();
}

}  // namespace

bool TabuList::contains(const std::string& word) const {
  for (const auto& [w, until] : victims_) {
    if (w == word) return true;
  }
  for (const auto& [w, until] : wraps_) {
    if (w == word) return true;
  }
  return false;
}

void TabuList::on_removed(const std::string& word, std::uint64_t placements_done) {
  if (tenure_ <= 0) return;
  push_bounded(victims_, word, placements_done + static_cast<std::uint64_t>(tenure_),
               static_cast<std::size_t>(tenure_));
}

void TabuList::on_wrapped(const std::string& word, std::uint64_t placements_done) {
  if (tenure_ <= 0) return;
  push_bounded(wraps_, word, placements_done + static_cast<std::uint64_t>(tenure_),
               static_cast<std::size_t>(tenure_));
}

void TabuList::expire(std::uint64_t placements_done) {
  while (!victims_.empty() && victims_.front().second <= placements_done) victims_.pop_front();
  while (!wraps_.empty() && wraps_.front().second <= placements_done) wraps_.pop_front();
}

void TabuList::clear() {
  victims_.clear();
  wraps_.clear();
}

int default_tabu_tenure(std::size_t vocab_size) {
  return std::max<int>(2, static_cast<int>((vocab_size + 9) / 10));
}

bool placeable(const std::string& word, const Grid& g) {
  if (g.empty()) return true;
  return g.any_legal_position(word);
}

std::optional<std::string> pick_word(const Grid& g, const WorkingList& list,
                                     const TabuList& tabu) {
  for (const std::string& word : list.words) {
    if (tabu.contains(word)) continue;
    if (placeable(word, g)) return word;
  }
  return std::nullopt;
}

namespace {

// Squared distance from the grid center to the word midpoint, in
// quarter-cell units so ties are exact.
long long center_distance(const Anchor& a, int len, int rows, int cols) {
  const long long mid_r = 2LL * a.row + (a.orientation == Orientation::Down ? len - 1 : 0);
  const long long mid_c = 2LL * a.col + (a.orientation == Orientation::Across ? len - 1 : 0);
  const long long dr = mid_r - (rows - 1);
  const long long dc = mid_c - (cols - 1);
  return dr * dr + dc * dc;
}

}  // namespace

std::optional<Anchor> choose_position(const std::string& word, const Grid& g,
                                      PlacementRule rule) {
  const int len = static_cast<int>(word.size());
  if (g.empty()) {
    if (len > g.cols() || g.rows() < 1) return std::nullopt;
    return Anchor{(g.rows() - 1) / 2, (g.cols() - len) / 2, Orientation::Across};
  }
  const std::vector<Anchor> anchors = g.legal_positions(word);
  if (anchors.empty()) return std::nullopt;
  if (rule == PlacementRule::FirstFit) return anchors.front();

  std::optional<Anchor> best;
  int best_crossings = -1;
  long long best_dist = 0;
  for (const Anchor& a : anchors) {
    int crossings = 0;
    g.fits(word, a, &crossings);
    const long long dist = center_distance(a, len, g.rows(), g.cols());
    bool better = false;
    if (crossings != best_crossings) {
      better = crossings > best_crossings;
    } else if (dist != best_dist) {
      better = dist < best_dist;
    } else if (best) {
      better = a < *best;  // row, col, across before down
    }
    if (!best || better) {
      best = a;
      best_crossings = crossings;
      best_dist = dist;
    }
  }
  return best;
}

Grid place(const std::string& word, const Grid& g, PlacementRule rule) {
  auto a = choose_position(word, g, rule);
  if (!a) throw GridError("word is not placeable: " + word);
  return g.write(word, *a);
}

namespace {

// Seeded exploration: uniform among the anchors tied on the rule's primary
// key (max crossings, or every legal anchor under FirstFit).
std::optional<Anchor> choose_position_stochastic(const std::string& word, const Grid& g,
                                                 PlacementRule rule, Rng& rng) {
  if (g.empty()) return choose_position(word, g, rule);
  const std::vector<Anchor> anchors = g.legal_positions(word);
  if (anchors.empty()) return std::nullopt;
  if (rule == PlacementRule::FirstFit) {
    return anchors[static_cast<std::size_t>(rng.below(anchors.size()))];
  }
  int best_crossings = -1;
  std::vector<Anchor> top;
  for (const Anchor& a : anchors) {
    int crossings = 0;
    g.fits(word, a, &crossings);
    if (crossings > best_crossings) {
      best_crossings = crossings;
      top.clear();
    }
    if (crossings == best_crossings) top.push_back(a);
  }
  return top[static_cast<std::size_t>(rng.below(top.size()))];
}

}  // namespace

std::optional<std::string> victim(const Grid& g, const WorkingList& list, const TabuList& tabu) {
  if (list.empty() || g.empty()) return std::nullopt;
  for (const Placement& p : g.placements()) {
    // only removals that leave a standalone crossword are offered: no
    // remnant runs, no disconnected components
    if (!g.remove_is_clean(p.word)) continue;
    const Grid without = g.remove(p.word);
    if (!without.connected()) continue;
    for (const std::string& word : list.words) {
      if (tabu.contains(word)) continue;
      if (placeable(word, without)) return p.word;
    }
  }
  return std::nullopt;
}

std::pair<Grid, WorkingList> wraparound(Grid g, WorkingList list) {
  if (g.empty()) throw GridError("wraparound on an empty grid");
  const std::string last = g.placements().back().word;  // placements are in seq order
  Grid out = g.remove(last);
  list.push_tail(last);
  return {std::move(out), std::move(list)};
}

Grid reconnect(const Grid& g, const std::vector<std::string>& candidates) {
  Grid cur = g;
  bool progressed = true;
  while (!cur.connected() && progressed) {
    progressed = false;
    const std::vector<int> comp = cur.component_ids();
    for (const std::string& word : candidates) {
      if (cur.has_word(word)) continue;
      for (const Anchor& a : cur.legal_positions(word)) {
        const std::vector<int> crossed = cur.crossed_placements(word, a);
        if (crossed.size() < 2) continue;
        bool bridges = false;
        for (std::size_t i = 1; i < crossed.size() && !bridges; ++i) {
          bridges = comp[crossed[i]] != comp[crossed[0]];
        }
        if (bridges) {
          cur = cur.write(word, a);
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
  }
  return cur;
}

const char* to_string(ResetPolicy p) {
  return p == ResetPolicy::Reset ? "reset" : "continue";
}

std::optional<ResetPolicy> reset_policy_from_string(const std::string& s) {
  if (s == "reset") return ResetPolicy::Reset;
  if (s == "continue") return ResetPolicy::Continue;
  return std::nullopt;
}

const char* to_string(Action a) {
  switch (a) {
    case Action::Place: return "PLACE";
    case Action::Victim: return "VICTIM";
    case Action::Wrap: return "WRAP";
    case Action::Reset: return "RESET";
    case Action::Resize: return "RESIZE";
  }
  return "PLACE";
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::AllWordsPlaced: return "all-words-placed";
    case StopReason::IterationLimit: return "iteration-limit";
    case StopReason::TargetReached: return "target-reached";
    case StopReason::UtilizationReached: return "utilization-reached";
    case StopReason::SizeLimit: return "size-limit";
    case StopReason::TimeLimit: return "time-limit";
    case StopReason::Stuck: return "stuck";
    case StopReason::Saturated: return "saturated";
  }
  return "iteration-limit";
}

namespace {

std::vector<std::string> unplaced_words(const Vocabulary& vocab, const Grid& g) {
  std::vector<std::string> out;
  for (const std::string& w : vocab.words) {
    if (!g.has_word(w)) out.push_back(w);
  }
  return out;
}

}  // namespace

GenerationResult run_generator(const Vocabulary& vocab, const GeneratorConfig& config) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  if (config.max_iterations == 0 && config.time_limit_seconds <= 0.0 &&
      config.target_words == 0 && config.max_grid == 0 && config.target_utilization <= 0.0) {
    throw std::invalid_argument("no termination criterion configured");
  }
  const int longest = static_cast<int>(vocab.longest());
  int grid_size = config.initial_grid > 0 ? config.initial_grid : longest;
  if (grid_size < longest) {
    throw std::invalid_argument("initial grid " + std::to_string(grid_size) +
                                " cannot hold the longest word (" + std::to_string(longest) +
                                " letters)");
  }
  if (config.max_grid > 0 && longest > config.max_grid) {
    throw std::invalid_argument("longest word (" + std::to_string(longest) +
                                " letters) exceeds the maximum grid size " +
                                std::to_string(config.max_grid));
  }

  const RankVector ranks = rank_words(vocab, config.strategy);
  const int tenure =
      config.tabu_tenure < 0 ? default_tabu_tenure(vocab.size()) : config.tabu_tenure;

  WorkingList list{sorted_list(vocab, ranks, config.order)};
  Grid grid(grid_size, grid_size);
  Grid best = grid;
  TabuList tabu(tenure);
  Rng rng(config.seed);

  GenerationResult result{best, 0, 0, StopReason::IterationLimit, {}, {}, {}};
  std::uint64_t i = 0;
  std::uint64_t placements_done = 0;
  std::uint64_t last_improvement = 0;
  std::string epoch_top = list.head();
  bool head_moved = false;      // head left epoch_top at least once this epoch
  bool victim_window = false;   // disconnection allowed until reconnect/reset
  const auto started = std::chrono::steady_clock::now();

  auto time_exceeded = [&] {
    if (config.time_limit_seconds <= 0.0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    return elapsed.count() >= config.time_limit_seconds;
  };

  // The best grid must stand on its own as a puzzle, so disconnected
  // transients (victim windows) are never captured.
  auto note_best = [&](const Grid& g, std::uint64_t iter) {
    const int n_words = static_cast<int>(g.placements().size());
    if (n_words <= result.n_best || !g.connected()) return false;
    best = g;
    result.n_best = n_words;
    result.milestones.push_back(Milestone{n_words, iter, g.utilization(), grid_size});
    last_improvement = iter;
    return true;
  };

  auto epoch_transition = [&]() -> bool {
    // returns false when the size limit stops the run
    if (!grid.connected()) {
      Grid fixed = reconnect(grid, unplaced_words(vocab, grid));
      if (fixed.placements().size() > grid.placements().size()) {
        for (const Placement& p : fixed.placements()) list.erase(p.word);
        grid = std::move(fixed);
        note_best(grid, i);
      }
    }
    victim_window = !grid.connected();
    grid_size += 1;
    if (config.max_grid > 0 && grid_size > config.max_grid) {
      result.reason = StopReason::SizeLimit;
      return false;
    }
    if (config.reset_policy == ResetPolicy::Reset) {
      grid = Grid(grid_size, grid_size);
      list = WorkingList{sorted_list(vocab, ranks, config.order)};
      tabu.clear();
      victim_window = false;
      result.log.push_back(RunLogEntry{i, Action::Reset, "", 0, grid_size});
    } else {
      grid = grid.resized(grid_size, grid_size);
      if (config.repack_on_expand) {
        for (int moves = 0; moves < grid_size * 2; ++moves) {
          Grid packed = grid.repacked();
          if (packed.placements() == grid.placements()) break;
          grid = std::move(packed);
        }
      }
      result.log.push_back(RunLogEntry{
          i, Action::Resize, "", static_cast<int>(grid.placements().size()), grid_size});
    }
    if (!list.empty()) epoch_top = list.head();
    head_moved = false;
    return true;
  };

  while (true) {
    if (list.empty()) {
      result.reason = StopReason::AllWordsPlaced;
      break;
    }
    if (i >= config.max_iterations) {
      result.reason = StopReason::IterationLimit;
      break;
    }
    if (time_exceeded()) {
      result.reason = StopReason::TimeLimit;
      break;
    }

    Action action;
    std::string acted;
    if (auto w = pick_word(grid, list, tabu)) {
      if (config.stochastic_placement) {
        const auto anchor = choose_position_stochastic(*w, grid, config.placement, rng);
        grid = grid.write(*w, *anchor);  // pick_word guarantees a position exists
      } else {
        grid = place(*w, grid, config.placement);
      }
      list.erase(*w);
      ++placements_done;
      tabu.expire(placements_done);
      action = Action::Place;
      acted = *w;
    } else if (config.enable_victim && (acted = victim(grid, list, tabu).value_or("")) != "") {
      grid = grid.remove(acted);
      list.push_tail(acted);
      tabu.on_removed(acted, placements_done);
      action = Action::Victim;
    } else if (config.enable_wrap && !grid.empty()) {
      acted = grid.placements().back().word;
      std::tie(grid, list) = wraparound(std::move(grid), std::move(list));
      // wrapped words are tabu too; otherwise a deterministic re-placement
      // turns LIFO backtracking into a two-step cycle
      tabu.on_wrapped(acted, placements_done);
      action = Action::Wrap;
    } else {
      // Nothing movable. Brute runs stop here; a resetting generator can
      // still make progress by advancing the epoch (the reset clears the
      // tabu list).
      if (config.ge_max > 0 && config.reset_policy == ResetPolicy::Reset) {
        if (!epoch_transition()) break;
        continue;
      }
      result.reason = StopReason::Stuck;
      break;
    }

    ++i;
    const int n_words = static_cast<int>(grid.placements().size());
    result.log.push_back(RunLogEntry{i, action, acted, n_words, grid_size});
    note_best(grid, i);
    // A removal can sever the grid (a wraparound may take out a word that
    // became the sole bridge after an earlier victim removal). The window
    // stays open until the epoch-boundary reconnect or a reset closes it.
    if (!grid.connected()) victim_window = true;

    if (config.validate_steps) {
      for (const std::string& issue : grid.check_invariants(!victim_window)) {
        result.validation_issues.push_back("iteration " + std::to_string(i) + ": " + issue);
      }
    }

    if (config.target_words > 0 && result.n_best >= config.target_words) {
      result.reason = StopReason::TargetReached;
      break;
    }
    if (config.target_utilization > 0.0 && best.utilization() >= config.target_utilization) {
      result.reason = StopReason::UtilizationReached;
      break;
    }
    if (config.stall_window > 0 && i - last_improvement >= config.stall_window) {
      result.reason = StopReason::Saturated;
      break;
    }

    if (config.ge_max > 0 && !list.empty()) {
      const bool cycled =
          config.epoch_on_cycle && head_moved && list.head() == epoch_top;
      if (list.head() != epoch_top) head_moved = true;
      if (i % static_cast<std::uint64_t>(config.ge_max) == 0 || cycled) {
        if (!epoch_transition()) break;
      }
    }
  }

  result.best = std::move(best);
  result.iterations = i;
  return result;
}

}  // namespace crossgen
