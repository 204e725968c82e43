#include "cbt/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cbt {

void Context::validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (l < 2) throw std::invalid_argument("l must be at least 2");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-" || text == "()") return {};
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                                 : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int residue(Node n, int l) { return ((n.row - n.col) % l + l) % l; }

BoundaryNodes boundary_nodes(const Partition& la, int l, std::optional<int> r) {
  BoundaryNodes out;
  const int len = la.length();
  for (int i = 1; i <= len + 1; ++i) {
    if (i == 1 || la.row(i - 1) > la.row(i)) {
      Node n{i, la.row(i) + 1};
      if (!r || residue(n, l) == *r) out.indents.push_back(n);
    }
    if (i <= len && (i == len || la.row(i + 1) < la.row(i))) {
      Node n{i, la.row(i)};
      if (!r || residue(n, l) == *r) out.removables.push_back(n);
    }
  }
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  const int len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int i = 1; i <= len; ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa > sb) return false;
  }
  return true;
}

int lex_cmp(const Partition& a, const Partition& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Orders orders(const Partition& a, const Partition& b) {
  return {dominance_leq(a, b), lex_cmp(a, b)};
}

bool is_l_regular(const Partition& la, int l) {
  const auto& p = la.parts();
  int run = 1;
  for (std::size_t i = 1; i < p.size(); ++i) {
    run = (p[i] == p[i - 1]) ? run + 1 : 1;
    if (run >= l) return false;
  }
  return true;
}

std::vector<int> rho(int k) {
  std::vector<int> r(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = k - 1 - i;
  return r;
}

std::vector<int> add_rho(const Partition& la, int k) {
  if (la.length() > k) throw std::invalid_argument("partition has more than k rows");
  std::vector<int> x = rho(k);
  for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] += la.row(i + 1);
  return x;
}

Partition subtract_rho(const std::vector<int>& x) {
  const int k = static_cast<int>(x.size());
  std::vector<int> parts(x.size());
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - (k - 1 - i);
  return Partition(std::move(parts));
}

std::vector<int> gaps(const Partition& la, int k) {
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(std::max(k - 1, 0)));
  for (int i = 1; i < k; ++i) c.push_back(la.row(i) - la.row(i + 1) + 1);
  return c;
}

Partition add_fundamental(const Partition& la, int i, int count, int k) {
  if (i < 1 || i > k) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int r = 1; r <= k; ++r) parts[static_cast<std::size_t>(r - 1)] = la.row(r) + (r <= i ? count : 0);
  return Partition(std::move(parts));
}

bool is_k_critical(const Partition& la, const Context& ctx) {
  for (int c : gaps(la, ctx.k))
    if (c % ctx.l != 0) return false;
  return true;
}

bool is_interior(const Partition& la, const Context& ctx) {
  for (int c : gaps(la, ctx.k))
    if (c < ctx.l) return false;
  return true;
}

std::vector<int> box_coords(const Partition& la, const Context& ctx) {
  if (!is_interior(la, ctx)) throw std::domain_error("not interior");
  std::vector<int> d = gaps(la, ctx.k);
  for (int& x : d) x %= ctx.l;
  return d;
}

Partition critical_anchor(const Partition& la, const Context& ctx) {
  if (la.length() > ctx.k) throw std::invalid_argument("partition has more than k rows");
  const std::vector<int> d = box_coords(la, ctx);
  std::vector<int> mc(static_cast<std::size_t>(ctx.k));
  mc[static_cast<std::size_t>(ctx.k - 1)] = la.row(ctx.k);
  for (int i = ctx.k - 1; i >= 1; --i)
    mc[static_cast<std::size_t>(i - 1)] =
        mc[static_cast<std::size_t>(i)] + (la.row(i) - la.row(i + 1)) - d[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(mc));
}

WeightInfo weight_info(const Partition& la, const Context& ctx) {
  WeightInfo w;
  w.gaps = gaps(la, ctx.k);
  w.k_critical = is_k_critical(la, ctx);
  w.interior = is_interior(la, ctx);
  if (w.interior) {
    w.box_coords = box_coords(la, ctx);
    w.critical_anchor = critical_anchor(la, ctx);
  }
  return w;
}

namespace {

void enumerate(int remaining, int max_part, int rows_left, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  // The first part must be large enough for the rest to fit in rows_left rows.
  const int lo = (remaining + rows_left - 1) / rows_left;
  for (int p = std::min(remaining, max_part); p >= lo; --p) {
    cur.push_back(p);
    enumerate(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int k) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  enumerate(n, n, k, cur, out);
  return out;
}

std::vector<int> residue_signature(const Partition& la, const Context& ctx) {
  std::vector<int> x = add_rho(la, ctx.k);
  for (int& v : x) v = ((v % ctx.l) + ctx.l) % ctx.l;
  std::sort(x.begin(), x.end());
  return x;
}

bool same_orbit(const Partition& a, const Partition& b, const Context& ctx) {
  return a.size() == b.size() && residue_signature(a, ctx) == residue_signature(b, ctx);
}

std::vector<Partition> orbit_members(const Partition& mu, const Context& ctx) {
  const std::vector<int> sig = residue_signature(mu, ctx);
  std::vector<Partition> out;
  for (Partition& la : partitions_of(mu.size(), ctx.k))
    if (residue_signature(la, ctx) == sig) out.push_back(std::move(la));
  return out;
}

}  // namespace cbt
