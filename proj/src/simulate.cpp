#include "polity/simulate.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "polity/constants.hpp"
#include "polity/error.hpp"
#include "polity/rng.hpp"

namespace polity {

namespace {

// Inverse-CDF sample of one row; n is small so a linear scan is fine.
int sample_row(const Matrix& m, int row, Xoshiro256StarStar& rng) {
  double u = rng.uniform01();
  double acc = 0.0;
  const int n = static_cast<int>(m.cols());
  for (int j = 0; j < n; ++j) {
    acc += m(row, j);
    if (u < acc) return j;
  }
  return n - 1;  // guard against rounding at the top of the CDF
}

// Self-transitions leave the absorption distribution untouched, so each step
// samples from the current row conditioned on leaving it.
int absorbing_walk(const Matrix& m, int start, const std::vector<char>& is_candidate,
                   Xoshiro256StarStar& rng) {
  const int n = static_cast<int>(m.cols());
  int current = start;
  for (long step = 0; step < kWalkLimit; ++step) {
    double leave_mass = 1.0 - m(current, current);
    if (leave_mass <= 1e-15)
      throw Error(ErrorCode::WalkLimitExceeded,
                  "walk is stuck: person " + std::to_string(current + 1) +
                      " listens to nobody else and cannot reach a candidate");
    double u = rng.uniform01() * leave_mass;
    double acc = 0.0;
    int next = -1;
    for (int j = 0; j < n; ++j) {
      if (j == current) continue;
      acc += m(current, j);
      if (u < acc) {
        next = j;
        break;
      }
    }
    if (next == -1) {
      for (next = n - 1; next == current; --next) {
      }
    }
    if (is_candidate[next]) return next;
    current = next;
  }
  throw Error(ErrorCode::WalkLimitExceeded,
              "walk from person " + std::to_string(start + 1) + " exceeded " +
                  std::to_string(kWalkLimit) + " steps without reaching a candidate");
}

struct TrialAccumulator {
  Matrix marginal_counts;  // |I| x |J|
  std::map<std::vector<int>, long long> joint_counts;
  long long unresolved = 0;
};

using TrialBody = void (*)(const Matrix&, const IndexPartition&, const std::vector<char>&,
                           const std::vector<int>&, Xoshiro256StarStar&, TrialAccumulator&);

// Runs trials [0, trials) with per-trial RNG streams, split across threads.
// Streams depend only on (seed, trial), so the schedule cannot change the
// result; integer accumulators merge without order sensitivity.
SimulationResult run_trials(const Matrix& m, const IndexPartition& p, long long trials,
                            std::uint64_t seed, int threads, TrialBody body, bool wants_joint) {
  if (trials < 1) throw Error(ErrorCode::BadParameters, "trials must be at least 1");
  if (threads < 1) threads = 1;
  const int n = static_cast<int>(m.rows());

  std::vector<char> is_candidate(n, 0);
  for (int j : p.candidates()) is_candidate[j] = 1;
  std::vector<int> candidate_slot(n, -1);
  for (size_t k = 0; k < p.candidates().size(); ++k) candidate_slot[p.candidates()[k]] = static_cast<int>(k);

  auto worker = [&](long long lo, long long hi, TrialAccumulator& acc, std::exception_ptr& err) {
    try {
      acc.marginal_counts = Matrix::Zero(p.voters().size(), p.candidates().size());
      for (long long t = lo; t < hi; ++t) {
        auto rng = Xoshiro256StarStar::for_stream(seed, static_cast<std::uint64_t>(t));
        body(m, p, is_candidate, candidate_slot, rng, acc);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  int used = static_cast<int>(std::min<long long>(threads, trials));
  std::vector<TrialAccumulator> parts(used);
  std::vector<std::exception_ptr> errors(used);
  if (used == 1) {
    worker(0, trials, parts[0], errors[0]);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (trials + used - 1) / used;
    for (int w = 0; w < used; ++w) {
      long long lo = w * chunk, hi = std::min<long long>(trials, lo + chunk);
      pool.emplace_back(worker, lo, hi, std::ref(parts[w]), std::ref(errors[w]));
    }
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  SimulationResult out;
  out.trials = trials;
  out.seed = seed;
  out.has_joint = wants_joint;
  out.marginal = Matrix::Zero(p.voters().size(), p.candidates().size());
  for (auto& part : parts) {
    out.marginal += part.marginal_counts;
    out.unresolved += part.unresolved;
    for (auto& [profile, count] : part.joint_counts) out.joint_counts[profile] += count;
  }
  out.marginal /= static_cast<double>(trials);
  return out;
}

void marginal_trial(const Matrix& m, const IndexPartition& p, const std::vector<char>& is_candidate,
                    const std::vector<int>& candidate_slot, Xoshiro256StarStar& rng,
                    TrialAccumulator& acc) {
  for (size_t vi = 0; vi < p.voters().size(); ++vi) {
    int absorbed = absorbing_walk(m, p.voters()[vi], is_candidate, rng);
    acc.marginal_counts(vi, candidate_slot[absorbed]) += 1.0;
  }
}

void joint_trial(const Matrix& m, const IndexPartition& p, const std::vector<char>& is_candidate,
                 const std::vector<int>& candidate_slot, Xoshiro256StarStar& rng,
                 TrialAccumulator& acc) {
  const int n = static_cast<int>(m.rows());
  // Every non-candidate takes part in the delegation round, even when the
  // caller only reports on a subset of voters.
  std::vector<int> choice(n, -1), decision(n, -1);
  for (int i = 0; i < n; ++i)
    if (!is_candidate[i]) choice[i] = sample_row(m, i, rng);

  long resamples = 0;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  for (int start = 0; start < n; ++start) {
    if (is_candidate[start] || decision[start] != -1) continue;
    path.clear();
    int v = start;
    int settled = -1;
    while (true) {
      if (decision[v] != -1) {
        settled = decision[v];
        break;
      }
      if (on_path[v]) {
        // delegation cycle among distinct persons: everyone on the cycle
        // draws a fresh choice and the chase restarts from there
        if (++resamples > kResampleLimit)
          throw Error(ErrorCode::ResampleLimit, "delegation cycle kept re-forming after " +
                                                    std::to_string(kResampleLimit) + " resamples");
        acc.unresolved += 1;
        size_t cycle_from = std::find(path.begin(), path.end(), v) - path.begin();
        for (size_t t = cycle_from; t < path.size(); ++t) {
          choice[path[t]] = sample_row(m, path[t], rng);
          on_path[path[t]] = 0;
        }
        path.resize(cycle_from);
        continue;
      }
      on_path[v] = 1;
      path.push_back(v);
      int c = choice[v];
      if (c == v) {
        // self-reliance: an independent decision, drawn from this person's
        // own view of the race
        settled = absorbing_walk(m, v, is_candidate, rng);
        break;
      }
      if (is_candidate[c]) {
        settled = c;
        break;
      }
      v = c;
    }
    // everyone on the path shares the decision it ended on
    for (int node : path) {
      decision[node] = settled;
      on_path[node] = 0;
    }
  }

  std::vector<int> profile(p.voters().size());
  for (size_t vi = 0; vi < p.voters().size(); ++vi) {
    int d = decision[p.voters()[vi]];
    profile[vi] = d;
    acc.marginal_counts(vi, candidate_slot[d]) += 1.0;
  }
  acc.joint_counts[profile] += 1;
}

SimulationResult run(const Matrix& m, const IndexPartition& p, long long trials, std::uint64_t seed,
                     int threads, bool joint) {
  if (p.society_size() != m.rows())
    throw Error(ErrorCode::BadIndexSet, "partition does not match matrix size");
  return run_trials(m, p, trials, seed, threads, joint ? joint_trial : marginal_trial, joint);
}

}  // namespace

SimulationResult simulate_marginals(const DominatedMatrix& a, const IndexPartition& p,
                                    long long trials, std::uint64_t seed, int threads) {
  return run(a.entries(), p, trials, seed, threads, false);
}

SimulationResult simulate_marginals(const PoliticsMatrix& a, const IndexPartition& p,
                                    long long trials, std::uint64_t seed, int threads) {
  return run(a.entries(), p, trials, seed, threads, false);
}

SimulationResult simulate_joint(const DominatedMatrix& a, const IndexPartition& p,
                                long long trials, std::uint64_t seed, int threads) {
  return run(a.entries(), p, trials, seed, threads, true);
}

SimulationResult simulate_joint(const PoliticsMatrix& a, const IndexPartition& p,
                                long long trials, std::uint64_t seed, int threads) {
  return run(a.entries(), p, trials, seed, threads, true);
}

}  // namespace polity
