#include "cbt/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "cbt/cache.hpp"

namespace cbt {

std::string to_string(Mode m) { return m == Mode::llt ? "llt" : "fast"; }

Mode parse_mode(const std::string& s) {
  if (s == "llt") return Mode::llt;
  if (s == "fast") return Mode::fast;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::ladder: return "ladder";
    case ConstructionKind::column_shift: return "column_shift";
    case ConstructionKind::critical: return "critical";
    case ConstructionKind::interior_box: return "interior_box";
    case ConstructionKind::boundary_box: return "boundary_box";
    case ConstructionKind::boundary_tail: return "boundary_tail";
    case ConstructionKind::critical_face: return "critical_face";
    case ConstructionKind::ladder_fallback: return "ladder_fallback";
  }
  return "?";
}

namespace {

Construction ladder_construction(const Partition& mu, const Context& ctx, ConstructionKind kind) {
  Construction c;
  c.kind = kind;
  c.path = ladder_path(mu, ctx);
  return c;
}

// Only the weak form of (L) is required: it is what makes mu the top term of
// f(T) G(nu) with coefficient 1. The full form fails on some box paths even
// for k <= l, e.g. (3,3,3) -> (7,6,4) at k = l = 4. For k <= l the weak form
// always holds; beyond that a failing path is replaced by the ladder.
bool accept_path(const SkewPath& p, const Context& ctx) {
  if (check_weak_property_L(p, ctx)) return true;
  if (ctx.k <= ctx.l)
    throw std::logic_error("internal: constructed path from " + p.start().to_string() + " to " +
                           p.end().to_string() + " violates the weak form of property (L)");
  return false;
}

// Case 3: mu + rho on an open face through a critical corner. Moves back
// along the greatest admissible Lambda_j.
std::optional<Construction> critical_face_construction(const Partition& mu, const Context& ctx,
                                                       const std::vector<int>& c,
                                                       const std::vector<bool>& in_I) {
  for (int j = ctx.k - 1; j >= 1; --j) {
    const auto ji = static_cast<std::size_t>(j - 1);
    if (in_I[ji] || c[ji] <= ctx.l) continue;
    Partition nu = add_fundamental(mu, j, -ctx.l, ctx.k);
    if (!is_l_regular(nu, ctx.l)) continue;
    SkewPath p = column_path(nu, j, ctx);
    if (!accept_path(p, ctx)) continue;
    Construction out;
    out.kind = ConstructionKind::critical_face;
    out.start = std::move(nu);
    out.path = std::move(p);
    return out;
  }
  return std::nullopt;
}

}  // namespace

Construction plan_construction(const Partition& mu, const Context& ctx, Mode mode) {
  ctx.validate();
  if (mu.length() > ctx.k) throw std::invalid_argument("mu has more than k rows");
  if (!is_l_regular(mu, ctx.l)) throw std::invalid_argument("mu is not l-regular");
  if (mode == Mode::llt) return ladder_construction(mu, ctx, ConstructionKind::ladder);

  const int k = ctx.k;
  const int l = ctx.l;
  if (mu.row(k) > 0) {
    Construction out;
    out.kind = ConstructionKind::column_shift;
    out.shift = mu.row(k);
    out.start = add_fundamental(mu, k, -out.shift, k);
    return out;
  }
  if (is_k_critical(mu, ctx)) {
    Construction out;
    out.kind = ConstructionKind::critical;
    out.start = mu;
    return out;
  }
  if (is_interior(mu, ctx)) {
    Construction out;
    out.kind = ConstructionKind::interior_box;
    out.start = critical_anchor(mu, ctx);
    const std::vector<int> d = box_coords(mu, ctx);
    out.path = box_path(out.start, d, ctx);
    if (!accept_path(out.path, ctx)) return ladder_construction(mu, ctx, ConstructionKind::ladder_fallback);
    return out;
  }

  // Boundary region: mu + rho = a + sum d_i Lambda_i with a critical corner.
  const std::vector<int> c = gaps(mu, k);
  std::vector<bool> in_I(c.size());
  bool corner_is_origin = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    in_I[i] = c[i] / l == 0;
    corner_is_origin = corner_is_origin && in_I[i];
  }
  if (corner_is_origin) return ladder_construction(mu, ctx, ConstructionKind::ladder);

  // nu + rho = p = a + sum_{i in I} Lambda_i, and mu = nu + sum d'_i Lambda_i.
  std::vector<int> nu_rows(static_cast<std::size_t>(k), 0);
  std::vector<int> dprime(c.size());
  for (int i = k - 1; i >= 1; --i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    const int nu_gap = in_I[ii] ? 0 : l * (c[ii] / l) - 1;
    nu_rows[ii] = nu_rows[ii + 1] + nu_gap;
    dprime[ii] = in_I[ii] ? c[ii] - 1 : c[ii] % l;
  }
  const Partition nu(nu_rows);
  const bool moves = std::any_of(dprime.begin(), dprime.end(), [](int d) { return d != 0; });

  if (moves && is_l_regular(nu, l)) {
    Construction out;
    out.kind = ConstructionKind::boundary_box;
    out.start = nu;
    out.path = box_path(nu, dprime, ctx);
    if (accept_path(out.path, ctx)) return out;
    return ladder_construction(mu, ctx, ConstructionKind::ladder_fallback);
  }
  if (moves) {
    // k > l: restart the box path at its first l-regular shape, checked after
    // each complete column.
    const std::vector<Node> nodes = box_nodes(nu, dprime, ctx);
    std::vector<int> rows = nu.parts();
    rows.resize(static_cast<std::size_t>(k), 0);
    std::size_t pos = 0;
    std::optional<Partition> restart;
    std::size_t restart_pos = 0;
    for (int i = k - 1; i >= 1 && !restart; --i) {
      for (int rep = 0; rep < dprime[static_cast<std::size_t>(i - 1)] && !restart; ++rep) {
        for (int t = 0; t < i; ++t) ++rows[static_cast<std::size_t>(nodes[pos++].row - 1)];
        Partition shape(rows);
        if (is_l_regular(shape, l)) {
          restart = std::move(shape);
          restart_pos = pos;
        }
      }
    }
    if (restart && *restart != mu) {
      Construction out;
      out.kind = ConstructionKind::boundary_tail;
      out.start = *restart;
      out.path = path_from_nodes(*restart, std::span(nodes).subspan(restart_pos), ctx);
      if (accept_path(out.path, ctx)) return out;
      return ladder_construction(mu, ctx, ConstructionKind::ladder_fallback);
    }
  }
  if (auto face = critical_face_construction(mu, ctx, c, in_I)) return std::move(*face);
  return ladder_construction(mu, ctx, ConstructionKind::ladder_fallback);
}

std::optional<std::string> check_gcb_invariants(const FockVector& g, const Partition& mu) {
  const Context& ctx = g.context();
  if (g.coeff(mu) != LaurentPoly(1)) return "coefficient at " + mu.to_string() + " is not 1";
  const std::vector<int> sig = residue_signature(mu, ctx);
  for (const auto& [la, p] : g.entries()) {
    if (la == mu) continue;
    if (!in_vZv(p)) return "coefficient at " + la.to_string() + " is not in vZ[v]: " + p.to_string();
    if (!dominance_leq(la, mu)) return la.to_string() + " is not dominated by " + mu.to_string();
    if (residue_signature(la, ctx) != sig)
      return la.to_string() + " is not in the orbit of " + mu.to_string();
  }
  return std::nullopt;
}

Session::Session(Context ctx, Mode mode, GcbCache* cache) : ctx_(ctx), mode_(mode), cache_(cache) {
  ctx_.validate();
}

void Session::require_admissible(const Partition& mu) const {
  if (mu.length() > ctx_.k) throw std::invalid_argument("mu has more than k rows");
  if (!is_l_regular(mu, ctx_.l)) throw std::invalid_argument("mu is not l-regular");
}

std::optional<Partition> Session::try_a_element(const Partition& mu, std::optional<FockVector>& out) {
  const Construction plan = plan_construction(mu, ctx_, mode_);
  switch (plan.kind) {
    case ConstructionKind::ladder:
    case ConstructionKind::ladder_fallback:
      out = apply_word(plan.path.steps, FockVector::basis(Partition{}, ctx_));
      return std::nullopt;
    case ConstructionKind::critical:
      out = FockVector::basis(mu, ctx_);
      return std::nullopt;
    default:
      break;
  }
  auto seed = memo_.find(plan.start);
  if (seed == memo_.end()) return plan.start;
  if (plan.kind == ConstructionKind::column_shift)
    out = seed->second.column_shifted(plan.shift);
  else
    out = apply_word(plan.path.steps, seed->second);
  return std::nullopt;
}

std::optional<Partition> Session::try_reduce(FockVector& work, const Partition& mu,
                                             std::unordered_set<Partition, PartitionHash>& corrected) {
  auto it = work.entries().begin();
  while (it != work.entries().end()) {
    if (it->first == mu || in_vZv(it->second)) {
      ++it;
      continue;
    }
    const Partition la = it->first;
    if (la > mu) throw std::logic_error("internal: A(" + mu.to_string() + ") has support above mu");
    if (!is_l_regular(la, ctx_.l))
      throw std::logic_error("internal: reduction reached non-l-regular " + la.to_string());
    auto g = memo_.find(la);
    if (g == memo_.end()) return la;
    if (!corrected.insert(la).second)
      throw std::logic_error("internal: reduction of " + mu.to_string() + " does not terminate at " +
                             la.to_string());
    const LaurentPoly gamma = gamma_correction(it->second);
    work.add_scaled(g->second, -gamma);
    // G(la) only touches diagrams lexicographically <= la.
    it = work.entries().upper_bound(la);
  }
  return std::nullopt;
}

bool Session::load_from_cache(const Partition& mu) {
  if (!cache_) return false;
  std::optional<FockVector> hit = cache_->lookup(ctx_, mode_, mu);
  if (!hit || check_gcb_invariants(*hit, mu)) return false;
  memo_.emplace(mu, std::move(*hit));
  order_.push_back(mu);
  ++cache_hits_;
  return true;
}

void Session::run(const Partition& root) {
  std::vector<Task> stack;
  std::unordered_set<Partition, PartitionHash> active;
  stack.push_back(Task{root, std::nullopt, {}});
  active.insert(root);
  while (!stack.empty()) {
    Task& t = stack.back();
    std::optional<Partition> dep;
    if (!t.work) dep = try_a_element(t.mu, t.work);
    if (!dep) dep = try_reduce(*t.work, t.mu, t.corrected);
    if (dep) {
      require_admissible(*dep);
      if (load_from_cache(*dep)) continue;
      if (!active.insert(*dep).second)
        throw std::logic_error("internal: cyclic dependency at " + dep->to_string());
      stack.push_back(Task{std::move(*dep), std::nullopt, {}});
      continue;
    }
    if (auto err = check_gcb_invariants(*t.work, t.mu))
      throw std::logic_error("internal: G(" + t.mu.to_string() + ") violates invariant: " + *err);
    Partition mu = std::move(t.mu);
    FockVector g = std::move(*t.work);
    stack.pop_back();
    active.erase(mu);
    if (cache_) cache_->store(ctx_, mode_, mu, g);
    if (plan_construction(mu, ctx_, mode_).kind == ConstructionKind::critical) ++closed_form_;
    memo_.emplace(mu, std::move(g));
    order_.push_back(mu);
    ++computed_;
  }
}

const FockVector& Session::gcb(const Partition& mu) {
  require_admissible(mu);
  auto it = memo_.find(mu);
  if (it != memo_.end()) return it->second;
  if (!load_from_cache(mu)) run(mu);
  return memo_.at(mu);
}

FockVector Session::a_element(const Partition& mu) {
  require_admissible(mu);
  std::optional<FockVector> out;
  while (auto dep = try_a_element(mu, out)) gcb(*dep);
  return std::move(*out);
}

FockVector Session::reduce(FockVector a, const Partition& mu) {
  require_admissible(mu);
  std::unordered_set<Partition, PartitionHash> corrected;
  while (auto dep = try_reduce(a, mu, corrected)) gcb(*dep);
  return a;
}

LaurentPoly Session::d_poly(const Partition& la, const Partition& mu) {
  if (la.length() > ctx_.k) throw std::invalid_argument("lambda has more than k rows");
  return gcb(mu).coeff(la);
}

DecMatrix dec_matrix(int n, Session& s, bool at_one) {
  DecMatrix m;
  m.rows = partitions_of(n, s.context().k);
  for (const Partition& p : m.rows)
    if (is_l_regular(p, s.context().l)) m.cols.push_back(p);
  m.entries.assign(m.rows.size(), std::vector<LaurentPoly>(m.cols.size()));
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    const FockVector& g = s.gcb(m.cols[j]);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      LaurentPoly p = g.coeff(m.rows[i]);
      m.entries[i][j] = at_one ? LaurentPoly(eval_at_one(p)) : std::move(p);
    }
  }
  return m;
}

}  // namespace cbt
