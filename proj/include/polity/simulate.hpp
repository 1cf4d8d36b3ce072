#ifndef POLITY_SIMULATE_HPP
#define POLITY_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "polity/types.hpp"

namespace polity {

struct SimulationResult {
  long long trials = 0;
  std::uint64_t seed = 0;
  Matrix marginal;  // |I| x |J| empirical support frequencies
  // Support profile (candidate per voter, 0-based, voter order) -> count.
  // Empty for marginal-only runs.
  std::map<std::vector<int>, long long> joint_counts;
  long long unresolved = 0;  // cycle-resample events across all trials
  bool has_joint = false;
};

// Independent absorbing walks: per trial and voter, step through the society
// sampling rows afresh until a candidate absorbs the walk. Matches the
// analytic support matrix as trials grow.
SimulationResult simulate_marginals(const DominatedMatrix& a, const IndexPartition& p,
                                    long long trials, std::uint64_t seed, int threads = 1);
SimulationResult simulate_marginals(const PoliticsMatrix& a, const IndexPartition& p,
                                    long long trials, std::uint64_t seed, int threads = 1);

// Shared-delegation profiles: per trial every non-candidate samples one
// choice from their row. Choosing a candidate decides; choosing another
// person adopts that person's realized decision; choosing oneself decides
// independently via a private absorbing walk. Delegation cycles among
// distinct persons are resolved by resampling the cycle's choices (counted
// in `unresolved`). Marginals still match the support matrix; joint
// frequencies expose the correlation it ignores.
SimulationResult simulate_joint(const DominatedMatrix& a, const IndexPartition& p,
                                long long trials, std::uint64_t seed, int threads = 1);
SimulationResult simulate_joint(const PoliticsMatrix& a, const IndexPartition& p,
                                long long trials, std::uint64_t seed, int threads = 1);

}  // namespace polity

#endif
