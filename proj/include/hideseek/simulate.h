#ifndef HIDESEEK_SIMULATE_H_
#define HIDESEEK_SIMULATE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "hideseek/graph.h"
#include "hideseek/hider.h"
#include "hideseek/rational.h"
#include "hideseek/seeker.h"

namespace hideseek {

std::uint64_t splitmix64(std::uint64_t x);

// Generator for trial `index` of a run seeded with `seed`; independent of how
// trials are spread over workers.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

// pos(h) in one sampled episode.
int run_episode(const SeekingStrategy& strategy, const Graph& g, NodeId h, std::uint64_t seed, std::uint64_t index);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  double mean = 0;
  double stderr_mean = 0;
  double ci_lo = 0;
  double ci_hi = 0;

  // |mean - value| within k standard errors.
  bool covers(const Rational& value, double k) const;
};

// Each trial draws a hider atom and then an episode from the same stream.
// workers <= 0 means worker_count().
MonteCarloResult monte_carlo(const SeekingStrategy& strategy, const HiderStrategy& hider, std::uint64_t trials,
                             std::uint64_t seed, int workers = 0);

std::string mc_csv_header();
std::string mc_csv_row(const std::string& instance, const std::string& strategy, const MonteCarloResult& r,
                       const std::optional<Rational>& exact);

}  // namespace hideseek

#endif  // HIDESEEK_SIMULATE_H_
