#include "cbt/fock.hpp"

#include <stdexcept>

namespace cbt {

FockVector FockVector::basis(const Partition& la, Context ctx) {
  FockVector x(ctx);
  x.add(la, 1);
  return x;
}

LaurentPoly FockVector::coeff(const Partition& la) const {
  auto it = entries_.find(la);
  return it == entries_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add(const Partition& la, const LaurentPoly& c) {
  if (la.length() > ctx_.k) throw std::invalid_argument("diagram has more than k rows");
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

FockVector& FockVector::add_scaled(const FockVector& other, const LaurentPoly& c) {
  if (c.is_zero()) return *this;
  for (const auto& [la, p] : other.entries_) add(la, p * c);
  return *this;
}

FockVector FockVector::column_shifted(int count) const {
  FockVector out(ctx_);
  for (const auto& [la, p] : entries_) out.add(add_fundamental(la, ctx_.k, count, ctx_.k), p);
  return out;
}

FockVector FockVector::truncated(int k) const {
  FockVector out(Context{k, ctx_.l});
  for (const auto& [la, p] : entries_)
    if (la.length() <= k) out.add(la, p);
  return out;
}

namespace {

Partition with_node(const Partition& la, int row) {
  std::vector<int> parts = la.parts();
  if (row == la.length() + 1)
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(parts));
}

// Exponent for adding the indent in `row`, counting only boundary nodes above.
int exponent_above(const BoundaryNodes& b, int row) {
  int n = 0;
  for (const Node& x : b.indents)
    if (x.row < row) ++n;
  for (const Node& x : b.removables)
    if (x.row < row) --n;
  return n;
}

}  // namespace

int n_exponent(const Partition& la, int target_row, int r, const Context& ctx) {
  const BoundaryNodes b = boundary_nodes(la, ctx.l, r);
  bool valid = false;
  for (const Node& x : b.indents) valid = valid || x.row == target_row;
  if (!valid) throw std::invalid_argument("no indent node of that residue in the target row");
  return exponent_above(b, target_row);
}

FockVector f_action(int r, const FockVector& x) {
  const Context& ctx = x.context();
  FockVector out(ctx);
  for (const auto& [la, p] : x.entries()) {
    const BoundaryNodes b = boundary_nodes(la, ctx.l, r);
    int removables_above = 0;
    std::size_t ri = 0;
    for (std::size_t i = 0; i < b.indents.size(); ++i) {
      const Node& node = b.indents[i];
      if (node.row > ctx.k) break;
      while (ri < b.removables.size() && b.removables[ri].row < node.row) {
        ++removables_above;
        ++ri;
      }
      out.add(with_node(la, node.row), p.shifted(static_cast<int>(i) - removables_above));
    }
  }
  return out;
}

FockVector divided_power(int r, int m, const FockVector& x) {
  if (m < 1) throw std::invalid_argument("divided power exponent must be positive");
  if (m == 1) return f_action(r, x);
  const Context& ctx = x.context();
  FockVector out(ctx);
  const int binom = m * (m - 1) / 2;
  std::vector<int> rows;
  std::vector<int> pick;
  for (const auto& [la, p] : x.entries()) {
    rows.clear();
    for (const Node& node : boundary_nodes(la, ctx.l, r).indents)
      if (node.row <= ctx.k) rows.push_back(node.row);
    const int n = static_cast<int>(rows.size());
    if (n < m) continue;
    // Enumerate m-subsets in increasing row order.
    pick.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      Partition cur = la;
      int exponent = binom;
      for (int idx : pick) {
        const int row = rows[static_cast<std::size_t>(idx)];
        exponent += exponent_above(boundary_nodes(cur, ctx.l, r), row);
        cur = with_node(cur, row);
      }
      out.add(cur, p.shifted(exponent));
      int i = m - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - m + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

FockVector apply_word(std::span<const WordStep> word, const FockVector& x) {
  FockVector cur = x;
  for (const WordStep& s : word) {
    cur = divided_power(s.residue, s.mult, cur);
    if (cur.is_zero()) break;
  }
  return cur;
}

}  // namespace cbt
