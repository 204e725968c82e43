#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cbt {

// Row bound k and level l; every computation is relative to one of these.
struct Context {
  int k = 1;
  int l = 2;

  // Throws std::invalid_argument unless k >= 1 and l >= 2.
  void validate() const;
  friend bool operator==(const Context&, const Context&) = default;
};

// A weakly decreasing sequence of non-negative integers with trailing zeros
// trimmed. The default ordering is lexicographic on the parts.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument if parts increase or are negative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // Length of row i (1-based); zero past the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  // "20,10"; the empty partition renders as "0".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// Comma-separated non-increasing integers; trailing zeros are accepted.
Partition parse_partition(std::string_view text);

// A box (row, col), both 1-based.
struct Node {
  int row;
  int col;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// Residue of the content row - col. Note the sign: content is i - j here,
// so (1,2) has residue l - 1, not 1.
int residue(Node n, int l);

struct BoundaryNodes {
  std::vector<Node> removables;
  std::vector<Node> indents;
};

// Removable and indent nodes sorted by row, optionally only those of
// residue r. The indent (length + 1, 1) is always included.
BoundaryNodes boundary_nodes(const Partition& la, int l, std::optional<int> r = std::nullopt);

// False when the sizes differ.
bool dominance_leq(const Partition& a, const Partition& b);
int lex_cmp(const Partition& a, const Partition& b);

struct Orders {
  bool dominance_leq;
  int lex_cmp;
};
Orders orders(const Partition& a, const Partition& b);

bool is_l_regular(const Partition& la, int l);

// ---- dominant weights of gl_k ----

// rho = (k-1, ..., 1, 0)
std::vector<int> rho(int k);
// la + rho as a point of Z^k. Requires length <= k.
std::vector<int> add_rho(const Partition& la, int k);
// Inverse of add_rho; throws unless the result is a partition.
Partition subtract_rho(const std::vector<int>& x);

// c_i = la_i - la_{i+1} + 1 for i = 1..k-1 (index 0 holds c_1).
std::vector<int> gaps(const Partition& la, int k);

// la + count * Lambda_i, where Lambda_i is the column of i boxes. count may be
// negative; throws if the result is not a partition with at most k rows.
Partition add_fundamental(const Partition& la, int i, int count, int k);

bool is_k_critical(const Partition& la, const Context& ctx);
bool is_interior(const Partition& la, const Context& ctx);
// d_i = c_i mod l for i = 1..k-1. Requires an interior diagram.
std::vector<int> box_coords(const Partition& la, const Context& ctx);
// The k-critical mu_c with la = mu_c + sum d_i Lambda_i.
// Throws std::domain_error("not interior") otherwise.
Partition critical_anchor(const Partition& la, const Context& ctx);

struct WeightInfo {
  std::vector<int> gaps;
  bool k_critical;
  bool interior;
  std::optional<Partition> critical_anchor;
  std::vector<int> box_coords;  // empty unless interior
};
WeightInfo weight_info(const Partition& la, const Context& ctx);

// ---- enumeration and orbits ----

// All partitions of n with at most k rows, lexicographically descending.
std::vector<Partition> partitions_of(int n, int k);

// Sorted residues (la + rho)_i mod l; equal signatures (and equal sizes)
// characterise one orbit of the level-l affine Weyl group.
std::vector<int> residue_signature(const Partition& la, const Context& ctx);
bool same_orbit(const Partition& a, const Partition& b, const Context& ctx);

// Every partition in the orbit of mu (same size, at most k rows),
// lexicographically descending. Always contains mu.
std::vector<Partition> orbit_members(const Partition& mu, const Context& ctx);

}  // namespace cbt
