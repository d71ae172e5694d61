// Benchmarks the experiment kernels: serial reference vs the OpenMP
// fan-out, verifying that both produce identical records.

#include <chrono>
#include <cstdio>
#include <string>

#include "crossgen/experiments.hpp"
#include "crossgen/io.hpp"

using namespace crossgen;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count();
}

bool same_records(const std::vector<ExperimentRecord>& a,
                  const std::vector<ExperimentRecord>& b) {
  return records_to_csv(a) == records_to_csv(b);
}

}  // namespace

int main(int argc, char** argv) {
  std::string pool_path = "data/words.txt";
  std::uint64_t samples = 400;
  std::uint64_t seed = 7;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--pool") pool_path = argv[i + 1];
    if (flag == "--samples") samples = std::strtoull(argv[i + 1], nullptr, 10);
    if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
  }

  const auto pool = load_word_pool(pool_path);
  Rng rng(seed, 0);
  const Vocabulary vocab = sample_vocabulary(pool, 26, 13, rng);

  PermStudyOptions opt;
  opt.grid_size = 13;
  opt.samples = samples;
  opt.seed = seed;
  opt.iteration_budget = 50;

  std::printf("workers available: %d\n", worker_count());
  std::printf("%-16s %10s %10s %9s %s\n", "study", "serial(s)", "parallel(s)", "speedup",
              "identical");

  struct Case {
    const char* name;
    std::vector<ExperimentRecord> (*run)(const Vocabulary&, const PermStudyOptions&, bool);
  };
  const Case cases[] = {
      {"perm-brute", &perm_brute},
      {"perm-backtrack", &perm_backtrack},
  };

  int rc = 0;
  for (const Case& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = c.run(vocab, opt, false);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = c.run(vocab, opt, true);
    const double tp = seconds_since(t0);

    const bool ok = same_records(serial, parallel);
    if (!ok) rc = 1;
    std::printf("%-16s %10.3f %10.3f %8.2fx %s\n", c.name, ts, tp, tp > 0 ? ts / tp : 0.0,
                ok ? "yes" : "NO");
  }
  return rc;
}
