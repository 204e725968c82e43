#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code paths with the library beyond
// the value types.

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "cbt/fock.hpp"
#include "cbt/laurent.hpp"
#include "cbt/partition.hpp"

namespace oracle {

using cbt::Context;
using cbt::FockVector;
using cbt::LaurentPoly;
using cbt::Partition;

inline int mod(int a, int l) { return ((a % l) + l) % l; }

// Residue of the node at the end of row i + 1 of la (1-based row i).
inline int addable_residue(const std::vector<int>& p, int i, int l) { return mod(i - (p[i - 1] + 1), l); }

inline std::vector<int> padded(const Partition& la, int n) {
  std::vector<int> p(la.parts());
  p.resize(static_cast<std::size_t>(n), 0);
  return p;
}

inline bool can_add(const std::vector<int>& p, int i) { return i == 1 || p[i - 2] > p[i - 1]; }
inline bool can_remove(const std::vector<int>& p, int i) {
  return p[i - 1] > 0 && (i == static_cast<int>(p.size()) || p[i] < p[i - 1]);
}

// f_r on a single diagram straight from the definition: for every row i
// where an r-node can be added, the exponent is (#addable r-nodes above)
// minus (#removable r-nodes above).
inline FockVector f_naive(int r, const Partition& la, const Context& ctx) {
  const int rows = la.length() + 1;
  std::vector<int> p = padded(la, rows + 1);
  FockVector out(ctx);
  for (int i = 1; i <= rows; ++i) {
    if (!can_add(p, i) || addable_residue(p, i, ctx.l) != r) continue;
    int e = 0;
    for (int a = 1; a < i; ++a) {
      if (can_add(p, a) && addable_residue(p, a, ctx.l) == r) ++e;
      if (can_remove(p, a) && mod(a - p[a - 1], ctx.l) == r) --e;
    }
    if (i > ctx.k) continue;
    std::vector<int> q = p;
    ++q[i - 1];
    out.add(Partition(q), LaurentPoly::monomial(e));
  }
  return out;
}

inline FockVector f_naive(int r, const FockVector& x) {
  FockVector out(x.context());
  for (const auto& [la, c] : x.entries()) out.add_scaled(f_naive(r, la, x.context()), c);
  return out;
}

// [m]! = prod_{i<=m} (v^{i-1} + v^{i-3} + ... + v^{1-i}).
inline LaurentPoly quantum_factorial(int m) {
  LaurentPoly f = 1;
  for (int i = 1; i <= m; ++i) {
    LaurentPoly q;
    for (int e = i - 1; e >= 1 - i; e -= 2) q += LaurentPoly::monomial(e);
    f *= q;
  }
  return f;
}

// Exact quotient p / d; throws if d does not divide p.
inline LaurentPoly exact_div(LaurentPoly p, const LaurentPoly& d) {
  LaurentPoly q;
  const int dtop = d.max_exp();
  const std::int64_t lead = d.coeff(dtop);
  while (!p.is_zero()) {
    const int top = p.max_exp();
    const std::int64_t c = p.coeff(top);
    if (c % lead != 0 || top - dtop < p.min_exp() - d.min_exp()) throw std::domain_error("not divisible");
    const LaurentPoly t = LaurentPoly::monomial(top - dtop, c / lead);
    q += t;
    p -= t * d;
  }
  return q;
}

// f_r^m x / [m]!, coefficientwise.
inline FockVector divided_power_by_division(int r, int m, const FockVector& x) {
  FockVector y = x;
  for (int i = 0; i < m; ++i) y = f_naive(r, y);
  const LaurentPoly fac = quantum_factorial(m);
  FockVector out(x.context());
  for (const auto& [la, c] : y.entries()) out.add(la, exact_div(c, fac));
  return out;
}

// la + rho and mu + rho are W-conjugate at level l iff some permutation
// matches their coordinates modulo l (the translation part then sums to
// zero because the sizes agree).
inline bool same_orbit_by_matching(const Partition& la, const Partition& mu, const Context& ctx) {
  if (la.size() != mu.size()) return false;
  std::vector<int> a(static_cast<std::size_t>(ctx.k)), b(static_cast<std::size_t>(ctx.k));
  for (int i = 0; i < ctx.k; ++i) {
    a[static_cast<std::size_t>(i)] = la.row(i + 1) + ctx.k - 1 - i;
    b[static_cast<std::size_t>(i)] = mu.row(i + 1) + ctx.k - 1 - i;
  }
  std::vector<int> perm(static_cast<std::size_t>(ctx.k));
  for (int i = 0; i < ctx.k; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int i = 0; i < ctx.k && ok; ++i)
      ok = mod(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], ctx.l) == 0;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Partition random_partition(std::mt19937& rng, int n, int k) {
  // Random composition of n into k parts, sorted.
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int i = 0; i < n; ++i) ++parts[static_cast<std::size_t>(pick(rng))];
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

inline Partition random_regular(std::mt19937& rng, int max_n, const Context& ctx) {
  std::uniform_int_distribution<int> size(0, max_n);
  while (true) {
    Partition p = random_partition(rng, size(rng), ctx.k);
    if (cbt::is_l_regular(p, ctx.l)) return p;
  }
}

inline LaurentPoly random_poly(std::mt19937& rng, int span = 4, int terms = 4) {
  std::uniform_int_distribution<int> e(-span, span), c(-5, 5), n(0, terms);
  LaurentPoly p;
  for (int i = n(rng); i > 0; --i) p += LaurentPoly::monomial(e(rng), c(rng));
  return p;
}

}  // namespace oracle
