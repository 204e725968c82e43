#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cbt/alcove.hpp"
#include "cbt/canonical.hpp"
#include "cbt/laurent.hpp"
#include "cbt/partition.hpp"

namespace cbt {

// Larger separation length first, then larger d table.
struct AlcoveDescending {
  bool operator()(const Alcove& a, const Alcove& b) const;
};

// Finite sum of chamber alcoves N_A with Laurent coefficients: an element of
// the antispherical module. Zero coefficients are never stored.
class KLVector {
 public:
  using Map = std::map<Alcove, LaurentPoly, AlcoveDescending>;

  explicit KLVector(Context ctx) : ctx_(ctx) {}
  static KLVector basis(const Alcove& a, Context ctx);

  const Context& context() const { return ctx_; }
  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  LaurentPoly coeff(const Alcove& a) const;

  // Throws std::invalid_argument for an alcove outside the positive chamber.
  void add(const Alcove& a, const LaurentPoly& c);
  KLVector& add_scaled(const KLVector& other, const LaurentPoly& c);

  std::string to_string() const;
  friend bool operator==(const KLVector& a, const KLVector& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

 private:
  Context ctx_;
  Map entries_;
};

// x C_s, extended linearly from
//   N_A C_s = N_As + v N_A      if As is in the chamber and above A,
//             N_As + v^-1 N_A   if As is in the chamber and below A,
//             0                 otherwise.
KLVector cs_action(const KLVector& x, int s);

// Memoized self-dual basis elements nbar(A) for one (k, l).
// Single-writer; not safe for concurrent use.
class KLSession {
 public:
  // generator_order lists 0..k-1 in the order tried when descending from A;
  // empty means 0, 1, ..., k-1.
  explicit KLSession(Context ctx, std::vector<int> generator_order = {});

  const Context& context() const { return ctx_; }
  std::size_t computed_count() const { return memo_.size(); }
  // Coefficients seen with a negative exponent while building some nbar.
  std::size_t negative_exponent_events() const { return negative_events_; }

  // Requires A in the positive chamber. Throws std::logic_error when no
  // generator lowers A inside the chamber, or when the result breaks
  // normalization or positivity.
  const KLVector& nbar(const Alcove& a);

  // Coefficient of a+(la + rho) in nbar(a+(mu + rho)); 0 off the orbit.
  LaurentPoly n_poly(const Partition& la, const Partition& mu);

 private:
  Context ctx_;
  std::vector<int> order_;
  std::unordered_map<Alcove, KLVector, AlcoveHash> memo_;
  std::size_t negative_events_ = 0;
};

struct KLMismatch {
  Partition la;
  LaurentPoly d;  // Fock side
  LaurentPoly n;  // alcove side
};

// Compares d(la, mu) with n(la, mu) over the dominated orbit of mu and the
// support of G(mu). Empty when the two sides agree.
std::vector<KLMismatch> compare_with_gcb(const Partition& mu, Session& gcb, KLSession& kl);

}  // namespace cbt
