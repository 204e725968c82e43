#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cbt/laurent.hpp"
#include "cbt/partition.hpp"

namespace cbt {

// Element of the truncated Fock space F_k: a finite sum of diagrams with at
// most k rows and Laurent-polynomial coefficients. Iteration is in
// lexicographically descending order of the diagrams.
class FockVector {
 public:
  using Map = std::map<Partition, LaurentPoly, std::greater<>>;

  explicit FockVector(Context ctx) : ctx_(ctx) {}
  static FockVector basis(const Partition& la, Context ctx);

  const Context& context() const { return ctx_; }
  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  LaurentPoly coeff(const Partition& la) const;

  // entries[la] += c; throws if la has more than k rows.
  void add(const Partition& la, const LaurentPoly& c);
  // this += c * other
  FockVector& add_scaled(const FockVector& other, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& other) { return add_scaled(other, 1); }
  FockVector& operator-=(const FockVector& other) { return add_scaled(other, -1); }

  // Adds `count` full columns Lambda_k to every diagram.
  FockVector column_shifted(int count) const;
  // Image in F_{k'} for k' <= k (drops diagrams with more than k' rows).
  FockVector truncated(int k) const;

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

 private:
  Context ctx_;
  Map entries_;
};

// One step of a residue word: f_r^(m).
struct WordStep {
  int residue;
  int mult;
  friend bool operator==(const WordStep&, const WordStep&) = default;
};

// Exponent N(la, nu) for nu = la plus the node at the end of target_row:
// indent r-nodes above that row minus removable r-nodes above it.
// Throws std::invalid_argument if that node is not an indent r-node.
int n_exponent(const Partition& la, int target_row, int r, const Context& ctx);

// f_r acting on x.
FockVector f_action(int r, const FockVector& x);

// The divided power f_r^(m), summing over m-subsets of indent r-nodes with
// the top-to-bottom exponent rule plus binom(m, 2).
FockVector divided_power(int r, int m, const FockVector& x);

// f_{r_s}^(m_s) ... f_{r_1}^(m_1) x; word[0] is applied first.
FockVector apply_word(std::span<const WordStep> word, const FockVector& x);

}  // namespace cbt
