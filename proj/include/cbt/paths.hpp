#pragma once

#include <span>
#include <vector>

#include "cbt/fock.hpp"
#include "cbt/partition.hpp"

namespace cbt {

// A standard skew tableau stored as its chain of shapes, one shape per
// maximal run of equal residues. steps[i] takes chain[i] to chain[i + 1].
struct SkewPath {
  std::vector<Partition> chain;
  std::vector<WordStep> steps;

  const Partition& start() const { return chain.front(); }
  const Partition& end() const { return chain.back(); }
};

// Groups a sequence of single-node additions into maximal residue runs.
// Throws std::logic_error if some node is not addable when its turn comes
// or would exceed k rows.
SkewPath path_from_nodes(const Partition& start, std::span<const Node> nodes, const Context& ctx);

// i + (l - 1)(j - 1); constant along each l-ladder.
int ladder_index(Node n, int l);

// Fills mu along l-ladders, each ladder top to bottom. Requires mu l-regular.
SkewPath ladder_path(const Partition& mu, const Context& ctx);

// Node order for box_path: dprime[k-2] copies of Lambda_{k-1}, then
// dprime[k-3] copies of Lambda_{k-2}, ..., each column filled top to bottom.
std::vector<Node> box_nodes(const Partition& nu, std::span<const int> dprime, const Context& ctx);
SkewPath box_path(const Partition& nu, std::span<const int> dprime, const Context& ctx);

// nu -> nu + Lambda_j -> ... -> nu + l Lambda_j.
std::vector<Node> column_nodes(const Partition& nu, int j, const Context& ctx);
SkewPath column_path(const Partition& nu, int j, const Context& ctx);

// Property (L): at each step the removable r-nodes all lie below the indent
// r-nodes, and the step adds exactly the topmost m indent r-nodes. Indents
// below row k are ignored since those diagrams vanish in F_k.
bool check_property_L(const SkewPath& p, const Context& ctx);

// Weaker form: the step adds the topmost m indent r-nodes and no removable
// r-node lies above an added node. This is what forces the top term of f(T)
// to have weight 1, and ladder tableaux satisfy it even when the full (L)
// fails, e.g. k=5, l=3, mu=(12,7,6,5,3) at (8,7,6,5,3).
bool check_weak_property_L(const SkewPath& p, const Context& ctx);

}  // namespace cbt
