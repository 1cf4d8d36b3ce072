#ifndef POLITY_FAMILIES_HPP
#define POLITY_FAMILIES_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "polity/constants.hpp"
#include "polity/types.hpp"

namespace polity {

// Index set F with no listening from F to its complement.
struct Family {
  IndexSet members;
};

// All families of a dominated matrix form a topology on {1..n}: closed under
// union and intersection, containing the empty set and the whole society.
struct FamilyTopology {
  std::vector<Family> families;     // empty when !exhaustive
  std::vector<Family> upper_class;  // minimal nonempty families, pairwise disjoint
  bool connected = true;
  bool exhaustive = true;           // whether `families` lists everything
};

// True iff every entry of a_hat from f to its complement is exactly zero.
bool is_family(const DominatedMatrix& a_hat, const IndexSet& f);

// Whole topology. Exhaustive listing walks the out-closed sets of the
// listening digraph; above `enum_limit` persons it either throws TooLarge or,
// with allow_partial, returns upper class and connectivity only.
FamilyTopology enumerate_families(const DominatedMatrix& a_hat, int enum_limit = kEnumLimit,
                                  bool allow_partial = false);

// Minimal nonempty families == terminal strongly connected components of the
// listening digraph.
std::vector<Family> upper_class_families(const DominatedMatrix& a_hat);

// False iff the society splits into two nonempty families with no listening
// either way (the listening digraph is disconnected as an undirected graph).
bool is_connected(const DominatedMatrix& a_hat);

// A nonempty family contained in `block`, when one exists. Its presence is
// equivalent to I - A_hat[block,block] being singular.
std::optional<Family> family_in_block(const DominatedMatrix& a_hat, const IndexSet& block);

nlohmann::json topology_to_json(const FamilyTopology& topology);

}  // namespace polity

#endif
