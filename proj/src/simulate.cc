#include "hideseek/simulate.h"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "hideseek/parallel.h"

namespace hideseek {

int worker_count() {
  if (const char* env = std::getenv("HIDESEEK_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ splitmix64(index + 1))};
  return Rng(seq);
}

int run_episode(const SeekingStrategy& strategy, const Graph& g, NodeId h, std::uint64_t seed, std::uint64_t index) {
  Rng rng = trial_rng(seed, index);
  return execute(strategy, g, rng).position(h);
}

bool MonteCarloResult::covers(const Rational& value, double k) const {
  return std::abs(mean - to_double(value)) <= k * stderr_mean;
}

MonteCarloResult monte_carlo(const SeekingStrategy& strategy, const HiderStrategy& hider, std::uint64_t trials,
                             std::uint64_t seed, int workers) {
  if (trials < 1) throw Error(ErrorKind::kBadInput, "monte carlo needs at least one trial");
  if (workers <= 0) workers = worker_count();
  std::vector<Rational> weights;
  for (const HiderAtom& atom : hider.atoms()) weights.push_back(atom.probability);
  struct Partial {
    std::uint64_t sum = 0;
    std::uint64_t sum_squares = 0;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(workers));
  parallel_chunks(trials, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    Partial& p = partials[static_cast<std::size_t>(w)];
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng = trial_rng(seed, i);
      const HiderAtom& atom = hider.atoms()[weights.size() == 1 ? 0 : sample_index(weights, rng)];
      auto pos = static_cast<std::uint64_t>(execute(strategy, atom.graph, rng).position(atom.node));
      p.sum += pos;
      p.sum_squares += pos * pos;
    }
  });
  MonteCarloResult r;
  r.trials = trials;
  r.seed = seed;
  for (const Partial& p : partials) {
    r.sum += p.sum;
    r.sum_squares += p.sum_squares;
  }
  const double n = static_cast<double>(trials);
  r.mean = static_cast<double>(r.sum) / n;
  if (trials > 1) {
    double var = (static_cast<double>(r.sum_squares) - static_cast<double>(r.sum) * r.mean) / (n - 1);
    r.stderr_mean = std::sqrt(std::max(var, 0.0) / n);
  }
  r.ci_lo = r.mean - 1.96 * r.stderr_mean;
  r.ci_hi = r.mean + 1.96 * r.stderr_mean;
  return r;
}

std::string mc_csv_header() { return "instance,strategy,trials,seed,mean,stderr,ci_lo,ci_hi,exact"; }

std::string mc_csv_row(const std::string& instance, const std::string& strategy, const MonteCarloResult& r,
                       const std::optional<Rational>& exact) {
  std::ostringstream os;
  os << std::setprecision(10) << instance << ',' << strategy << ',' << r.trials << ',' << r.seed << ',' << r.mean
     << ',' << r.stderr_mean << ',' << r.ci_lo << ',' << r.ci_hi << ',';
  if (exact) os << to_fraction_string(*exact);
  return os.str();
}

}  // namespace hideseek
