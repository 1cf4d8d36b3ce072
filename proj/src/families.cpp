#include "polity/families.hpp"

#include <algorithm>
#include <string>

#include "polity/error.hpp"

namespace polity {

namespace {

// Listening digraph on the sign pattern: edge i -> j iff a_hat(i,j) > 0.
// Self-loops are irrelevant for family structure and are dropped.
std::vector<std::vector<int>> listening_edges(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m(i, j) >= kExactZeroTol) adj[i].push_back(j);
  return adj;
}

// Iterative Tarjan over the subgraph induced by `nodes` (nodes must be
// sorted). Components come out in reverse topological order: every edge goes
// from a later component to an earlier one.
struct SccResult {
  std::vector<IndexSet> components;       // members sorted
  std::vector<int> component_of;          // indexed by original node id; -1 outside
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj, const IndexSet& nodes) {
  const int n = static_cast<int>(adj.size());
  SccResult out;
  out.component_of.assign(n, -1);

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0), in_scope(n, 0);
  for (int v : nodes) in_scope[v] = 1;
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  std::vector<Frame> call;

  for (int root : nodes) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& frame = call.back();
      int v = frame.v;
      bool descended = false;
      while (frame.edge < adj[v].size()) {
        int w = adj[v][frame.edge++];
        if (!in_scope[w]) continue;
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        IndexSet comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component_of[w] = static_cast<int>(out.components.size());
          comp.push_back(w);
          if (w == v) break;
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        Frame& parent = call.back();
        lowlink[parent.v] = std::min(lowlink[parent.v], lowlink[v]);
      }
    }
  }
  return out;
}

IndexSet all_nodes(int n) {
  IndexSet out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

// Component graph successor sets, deduplicated.
std::vector<std::vector<int>> condensation_edges(const std::vector<std::vector<int>>& adj, const SccResult& scc) {
  const int c = static_cast<int>(scc.components.size());
  std::vector<std::vector<int>> out(c);
  for (int k = 0; k < c; ++k) {
    for (int v : scc.components[k])
      for (int w : adj[v]) {
        int kw = scc.component_of[w];
        if (kw != k && kw != -1) out[k].push_back(kw);
      }
    std::sort(out[k].begin(), out[k].end());
    out[k].erase(std::unique(out[k].begin(), out[k].end()), out[k].end());
  }
  return out;
}

}  // namespace

bool is_family(const DominatedMatrix& a_hat, const IndexSet& f) {
  const int n = a_hat.size();
  IndexSet rest = complement(f, n);
  for (int i : f)
    for (int j : rest)
      if (a_hat.entries()(i, j) >= kExactZeroTol) return false;
  return true;
}

std::vector<Family> upper_class_families(const DominatedMatrix& a_hat) {
  auto adj = listening_edges(a_hat.entries());
  auto scc = strongly_connected_components(adj, all_nodes(a_hat.size()));
  auto cond = condensation_edges(adj, scc);
  std::vector<Family> out;
  for (size_t k = 0; k < scc.components.size(); ++k)
    if (cond[k].empty()) out.push_back(Family{scc.components[k]});
  std::sort(out.begin(), out.end(),
            [](const Family& a, const Family& b) { return a.members < b.members; });
  return out;
}

FamilyTopology enumerate_families(const DominatedMatrix& a_hat, int enum_limit, bool allow_partial) {
  const int n = a_hat.size();
  FamilyTopology topology;
  topology.upper_class = upper_class_families(a_hat);
  topology.connected = is_connected(a_hat);

  if (n > enum_limit) {
    if (!allow_partial)
      throw Error(ErrorCode::TooLarge, "exhaustive family listing refused for n = " + std::to_string(n) +
                                           " (limit " + std::to_string(enum_limit) + ")");
    topology.exhaustive = false;
    return topology;
  }

  // Families are exactly the unions of components that are closed under the
  // condensation's successor relation, so enumerate those closed sets.
  auto adj = listening_edges(a_hat.entries());
  auto scc = strongly_connected_components(adj, all_nodes(n));
  auto cond = condensation_edges(adj, scc);
  const int c = static_cast<int>(scc.components.size());

  std::vector<char> chosen(c, 0);
  std::vector<Family> families;
  auto emit = [&]() {
    IndexSet members;
    for (int k = 0; k < c; ++k)
      if (chosen[k]) members.insert(members.end(), scc.components[k].begin(), scc.components[k].end());
    std::sort(members.begin(), members.end());
    families.push_back(Family{std::move(members)});
  };
  // Tarjan numbers components so every successor of k has a smaller index.
  // Walking k upward, a component may join only if its successors already
  // did, which produces each closed set exactly once.
  auto walk = [&](auto&& self, int k) -> void {
    if (k == c) {
      emit();
      return;
    }
    self(self, k + 1);
    bool successors_in = std::all_of(cond[k].begin(), cond[k].end(), [&](int s) { return chosen[s] != 0; });
    if (successors_in) {
      chosen[k] = 1;
      self(self, k + 1);
      chosen[k] = 0;
    }
  };
  walk(walk, 0);

  std::sort(families.begin(), families.end(), [](const Family& a, const Family& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  topology.families = std::move(families);
  return topology;
}

bool is_connected(const DominatedMatrix& a_hat) {
  const int n = a_hat.size();
  if (n <= 1) return true;
  auto adj = listening_edges(a_hat.entries());
  std::vector<std::vector<int>> undirected(n);
  for (int i = 0; i < n; ++i)
    for (int j : adj[i]) {
      undirected[i].push_back(j);
      undirected[j].push_back(i);
    }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : undirected[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

std::optional<Family> family_in_block(const DominatedMatrix& a_hat, const IndexSet& block) {
  if (block.empty()) throw Error(ErrorCode::BadIndexSet, "block is empty");
  auto adj = listening_edges(a_hat.entries());
  auto scc = strongly_connected_components(adj, block);
  std::vector<char> in_block(a_hat.size(), 0);
  for (int v : block) in_block[v] = 1;

  std::vector<const IndexSet*> closed;
  for (size_t k = 0; k < scc.components.size(); ++k) {
    bool leaks = false;
    for (int v : scc.components[k]) {
      for (int w : adj[v]) {
        if (!in_block[w] || scc.component_of[w] != static_cast<int>(k)) {
          leaks = true;
          break;
        }
      }
      if (leaks) break;
    }
    if (!leaks) closed.push_back(&scc.components[k]);
  }
  if (closed.empty()) return std::nullopt;
  const IndexSet* best = *std::min_element(closed.begin(), closed.end(),
                                           [](const IndexSet* a, const IndexSet* b) { return *a < *b; });
  return Family{*best};
}

nlohmann::json topology_to_json(const FamilyTopology& topology) {
  nlohmann::json out;
  if (topology.exhaustive) {
    auto fams = nlohmann::json::array();
    for (const auto& f : topology.families) fams.push_back(to_one_based(f.members));
    out["families"] = std::move(fams);
  } else {
    out["families"] = nullptr;
  }
  auto upper = nlohmann::json::array();
  for (const auto& f : topology.upper_class) upper.push_back(to_one_based(f.members));
  out["upper_class"] = std::move(upper);
  out["connected"] = topology.connected;
  return out;
}

}  // namespace polity
