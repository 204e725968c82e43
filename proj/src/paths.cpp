#include "cbt/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbt {

namespace {

std::vector<int> padded(const Partition& la, int k) {
  std::vector<int> rows(static_cast<std::size_t>(k + 1), 0);
  for (int i = 1; i <= la.length(); ++i) rows[static_cast<std::size_t>(i - 1)] = la.row(i);
  return rows;
}

}  // namespace

SkewPath path_from_nodes(const Partition& start, std::span<const Node> nodes, const Context& ctx) {
  SkewPath p;
  p.chain.push_back(start);
  std::vector<int> rows = padded(start, ctx.k);
  int run_residue = -1;
  int run_len = 0;
  auto close_run = [&] {
    if (run_len == 0) return;
    p.steps.push_back({run_residue, run_len});
    p.chain.emplace_back(std::vector<int>(rows.begin(), rows.end() - 1));
    run_len = 0;
  };
  for (const Node& n : nodes) {
    if (n.row < 1 || n.row > ctx.k) throw std::logic_error("path node outside the first k rows");
    const auto r = static_cast<std::size_t>(n.row - 1);
    if (rows[r] + 1 != n.col || (n.row > 1 && rows[r - 1] < n.col))
      throw std::logic_error("path node is not addable");
    const int res = residue(n, ctx.l);
    if (res != run_residue) {
      close_run();
      run_residue = res;
    }
    ++rows[r];
    ++run_len;
  }
  close_run();
  return p;
}

int ladder_index(Node n, int l) { return n.row + (l - 1) * (n.col - 1); }

SkewPath ladder_path(const Partition& mu, const Context& ctx) {
  if (!is_l_regular(mu, ctx.l)) throw std::invalid_argument("mu is not l-regular");
  if (mu.length() > ctx.k) throw std::invalid_argument("mu has more than k rows");
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(mu.size()));
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.row(i); ++j) nodes.push_back({i, j});
  std::sort(nodes.begin(), nodes.end(), [&](const Node& a, const Node& b) {
    const int la = ladder_index(a, ctx.l), lb = ladder_index(b, ctx.l);
    return la != lb ? la < lb : a.row < b.row;
  });
  return path_from_nodes(Partition{}, nodes, ctx);
}

std::vector<Node> box_nodes(const Partition& nu, std::span<const int> dprime, const Context& ctx) {
  if (static_cast<int>(dprime.size()) != ctx.k - 1)
    throw std::invalid_argument("box coordinates must have k - 1 entries");
  std::vector<int> rows = padded(nu, ctx.k);
  std::vector<Node> nodes;
  for (int i = ctx.k - 1; i >= 1; --i) {
    for (int rep = 0; rep < dprime[static_cast<std::size_t>(i - 1)]; ++rep)
      for (int t = 1; t <= i; ++t) nodes.push_back({t, ++rows[static_cast<std::size_t>(t - 1)]});
  }
  return nodes;
}

SkewPath box_path(const Partition& nu, std::span<const int> dprime, const Context& ctx) {
  const std::vector<Node> nodes = box_nodes(nu, dprime, ctx);
  return path_from_nodes(nu, nodes, ctx);
}

std::vector<Node> column_nodes(const Partition& nu, int j, const Context& ctx) {
  if (j < 1 || j > ctx.k) throw std::invalid_argument("column index out of range");
  std::vector<int> rows = padded(nu, ctx.k);
  std::vector<Node> nodes;
  for (int rep = 0; rep < ctx.l; ++rep)
    for (int t = 1; t <= j; ++t) nodes.push_back({t, ++rows[static_cast<std::size_t>(t - 1)]});
  return nodes;
}

SkewPath column_path(const Partition& nu, int j, const Context& ctx) {
  const std::vector<Node> nodes = column_nodes(nu, j, ctx);
  return path_from_nodes(nu, nodes, ctx);
}

namespace {

bool check_L(const SkewPath& p, const Context& ctx, bool weak) {
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Partition& la = p.chain[i];
    const WordStep& s = p.steps[i];
    BoundaryNodes b = boundary_nodes(la, ctx.l, s.residue);
    std::erase_if(b.indents, [&](const Node& n) { return n.row > ctx.k; });
    if (static_cast<int>(b.indents.size()) < s.mult) return false;
    const int lowest = weak ? b.indents[static_cast<std::size_t>(s.mult - 1)].row : 0;
    for (const Node& rem : b.removables) {
      if (weak && rem.row < lowest) return false;
      if (!weak)
        for (const Node& ind : b.indents)
          if (rem.row < ind.row) return false;
    }
    std::vector<int> rows = la.parts();
    rows.resize(static_cast<std::size_t>(ctx.k), 0);
    for (int t = 0; t < s.mult; ++t) ++rows[static_cast<std::size_t>(b.indents[static_cast<std::size_t>(t)].row - 1)];
    if (Partition(std::move(rows)) != p.chain[i + 1]) return false;
  }
  return true;
}

}  // namespace

bool check_property_L(const SkewPath& p, const Context& ctx) { return check_L(p, ctx, false); }
bool check_weak_property_L(const SkewPath& p, const Context& ctx) { return check_L(p, ctx, true); }

}  // namespace cbt
