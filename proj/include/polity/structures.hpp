#ifndef POLITY_STRUCTURES_HPP
#define POLITY_STRUCTURES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polity/types.hpp"

namespace polity {

// Rooted tree over persons 0..n-1: parent[i] names who person i reports to;
// the root reports to itself.
struct TreeSpec {
  std::vector<int> parent;
  int root = 0;

  // Validates: exactly one self-parent (the root), all links in range, and
  // every person reaches the root (no cycles off the root).
  static TreeSpec of(std::vector<int> parent);
};

// Everybody listens to person 1 only. With leader_row given, row 1 becomes
// that distribution (a leader who listens back to the whole group).
DominatedMatrix gen_father_and_sons(int k, std::optional<RowVector> leader_row = std::nullopt);

// Everyone listens to their parent; the root listens to itself.
DominatedMatrix gen_family_tree(const TreeSpec& spec);

// Who supports whom when candidates run inside a tree: walking up from each
// non-candidate, the first candidate hit decides the group; hitting the root
// first lands in the leader_followers group.
struct PreferenceGroups {
  IndexSet leader_followers;                // G_0
  std::vector<IndexSet> per_candidate;      // aligned with the candidate set
};

PreferenceGroups tree_preference_groups(const TreeSpec& spec, const IndexSet& candidates);

// All members treated equally: diagonal r = 1 - (k-1)s, off-diagonal s.
DominatedMatrix gen_equality(int k, double s);

// Near-identity society I + eps*B for a zero-row-sum interaction B with
// positive off-diagonal entries.
PoliticsMatrix gen_near_identity(const CenteredMatrix& interaction, double eps);

// Random zero-row-sum interaction matrix with strictly positive off-diagonal
// entries; used by the CLI generator and by tests.
CenteredMatrix random_interaction(int n, std::uint64_t seed);

}  // namespace polity

#endif
