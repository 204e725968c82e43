#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cbt/fock.hpp"
#include "cbt/laurent.hpp"
#include "cbt/partition.hpp"
#include "cbt/paths.hpp"

namespace cbt {

enum class Mode { llt, fast };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

// How the triangular starting vector A(mu) is built.
enum class ConstructionKind {
  ladder,          // f(ladder tableau) on the empty diagram
  column_shift,    // mu_k > 0: Lambda_k-shift of G(mu - mu_k Lambda_k)
  critical,        // G(mu) = mu
  interior_box,    // box path from the critical anchor
  boundary_box,    // box path from nu = p - rho
  boundary_tail,   // k > l: tail of the box path from its first l-regular shape
  critical_face,   // l copies of Lambda_j from mu - l Lambda_j
  ladder_fallback, // boundary case the dispatch could not place
};
std::string to_string(ConstructionKind k);

struct Construction {
  ConstructionKind kind = ConstructionKind::ladder;
  // Diagram whose G is the seed; empty for the ladder kinds, mu for critical.
  Partition start;
  // Path from start to mu (unused for critical and column_shift).
  SkewPath path;
  // Number of Lambda_k columns for column_shift.
  int shift = 0;
};

// Chooses the construction for A(mu). Pure function of (mu, ctx, mode).
// Every emitted path is checked against the weak form of property (L); a violation throws
// std::logic_error when k <= l, and degrades to the ladder otherwise.
Construction plan_construction(const Partition& mu, const Context& ctx, Mode mode);

class GcbCache;

// Returns a description of the first violated memo invariant, if any:
// coefficient 1 at mu, vZ[v] elsewhere, support dominated by mu and inside
// its orbit.
std::optional<std::string> check_gcb_invariants(const FockVector& g, const Partition& mu);

// Memoized computation of the truncated canonical basis G(mu) for one
// (k, l, mode). Single-writer; not safe for concurrent use.
class Session {
 public:
  Session(Context ctx, Mode mode, GcbCache* cache = nullptr);

  const Context& context() const { return ctx_; }
  Mode mode() const { return mode_; }
  // Distinct G computations performed (cache hits are not counted).
  std::size_t computed_count() const { return computed_; }
  std::size_t cache_hits() const { return cache_hits_; }
  // Among computed_count(), those whose G is the diagram itself by
  // construction (k-critical in fast mode); no recursion was needed.
  std::size_t closed_form_count() const { return closed_form_; }
  bool is_memoized(const Partition& mu) const { return memo_.contains(mu); }
  // Partitions memoized so far, in insertion order.
  const std::vector<Partition>& computed_order() const { return order_; }

  // Requires mu l-regular with at most k rows.
  const FockVector& gcb(const Partition& mu);
  FockVector a_element(const Partition& mu);
  // Subtracts gamma_correction(coeff) * G(mu') for the lexicographically
  // largest offending mu' until every coefficient below mu is in vZ[v].
  FockVector reduce(FockVector a, const Partition& mu);
  LaurentPoly d_poly(const Partition& la, const Partition& mu);

 private:
  struct Task {
    Partition mu;
    std::optional<FockVector> work;
    std::unordered_set<Partition, PartitionHash> corrected;
  };

  void require_admissible(const Partition& mu) const;
  std::optional<Partition> try_a_element(const Partition& mu, std::optional<FockVector>& out);
  std::optional<Partition> try_reduce(FockVector& work, const Partition& mu,
                                      std::unordered_set<Partition, PartitionHash>& corrected);
  bool load_from_cache(const Partition& mu);
  void run(const Partition& mu);

  Context ctx_;
  Mode mode_;
  GcbCache* cache_;
  std::unordered_map<Partition, FockVector, PartitionHash> memo_;
  std::vector<Partition> order_;
  std::size_t computed_ = 0;
  std::size_t cache_hits_ = 0;
  std::size_t closed_form_ = 0;
};

struct DecMatrix {
  std::vector<Partition> rows;  // all partitions of n, at most k rows
  std::vector<Partition> cols;  // the l-regular ones
  std::vector<std::vector<LaurentPoly>> entries;  // entries[row][col]
};

// Decomposition matrix for partitions of n; at_one specialises v = 1.
DecMatrix dec_matrix(int n, Session& s, bool at_one);

}  // namespace cbt
