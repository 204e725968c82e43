#include "cbt/kl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cbt {

bool AlcoveDescending::operator()(const Alcove& a, const Alcove& b) const {
  const int la = separation_length(a), lb = separation_length(b);
  if (la != lb) return la > lb;
  return b.dmat() < a.dmat();
}

KLVector KLVector::basis(const Alcove& a, Context ctx) {
  KLVector x(ctx);
  x.add(a, 1);
  return x;
}

LaurentPoly KLVector::coeff(const Alcove& a) const {
  auto it = entries_.find(a);
  return it == entries_.end() ? LaurentPoly{} : it->second;
}

void KLVector::add(const Alcove& a, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!a.in_positive_chamber()) throw std::invalid_argument("alcove outside the positive chamber");
  auto [it, inserted] = entries_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

KLVector& KLVector::add_scaled(const KLVector& other, const LaurentPoly& c) {
  if (c.is_zero()) return *this;
  for (const auto& [a, p] : other.entries_) add(a, p * c);
  return *this;
}

std::string KLVector::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, p] : entries_) {
    os << (first ? "" : " + ") << '(' << p.to_string() << ")N" << a.to_string();
    first = false;
  }
  return os.str();
}

KLVector cs_action(const KLVector& x, int s) {
  KLVector out(x.context());
  for (const auto& [a, p] : x.entries()) {
    const Step step = right_multiply(a, s);
    if (!step.in_chamber) continue;
    out.add(step.alcove, p);
    out.add(a, p.shifted(step.relation == Relation::succ ? 1 : -1));
  }
  return out;
}

KLSession::KLSession(Context ctx, std::vector<int> generator_order)
    : ctx_(ctx), order_(std::move(generator_order)) {
  ctx_.validate();
  if (order_.empty()) {
    order_.resize(static_cast<std::size_t>(ctx_.k));
    std::iota(order_.begin(), order_.end(), 0);
  }
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) || sorted.size() != static_cast<std::size_t>(ctx_.k))
      throw std::invalid_argument("generator order must be a permutation of 0..k-1");
}

const KLVector& KLSession::nbar(const Alcove& a) {
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  if (a.rank() != ctx_.k) throw std::invalid_argument("alcove has wrong rank");
  if (!a.in_positive_chamber()) throw std::invalid_argument("alcove outside the positive chamber");

  if (separation_length(a) == 0) {
    return memo_.emplace(a, KLVector::basis(a, ctx_)).first->second;
  }

  int gen = -1;
  std::optional<Alcove> lower;
  for (int s : order_) {
    Step step = right_multiply(a, s);
    if (step.in_chamber && step.relation == Relation::prec) {
      gen = s;
      lower = std::move(step.alcove);
      break;
    }
  }
  if (gen < 0) throw std::logic_error("no generator lowers alcove " + a.to_string());

  KLVector work = cs_action(nbar(*lower), gen);

  // Every coefficient below a must end up in vZ[v]. Corrections only touch
  // alcoves below the one being fixed, so a single descending sweep works.
  std::optional<Alcove> last;
  while (true) {
    auto it = last ? work.entries().upper_bound(*last) : work.entries().begin();
    while (it != work.entries().end() && (it->first == a || in_vZv(it->second))) ++it;
    if (it == work.entries().end()) break;
    const Alcove b = it->first;
    const LaurentPoly c = it->second;
    if (c.min_exp() < 0) ++negative_events_;
    const KLVector& below = nbar(b);
    work.add_scaled(below, -gamma_correction(c));
    last = b;
  }

  if (work.coeff(a) != LaurentPoly(1))
    throw std::logic_error("nbar " + a.to_string() + " does not have leading coefficient 1");
  for (const auto& [b, p] : work.entries()) {
    if (b != a && !in_vZv(p))
      throw std::logic_error("nbar " + a.to_string() + " has coefficient " + p.to_string() + " outside vZ[v]");
    if (!classify(p).nonneg_coeffs)
      throw std::logic_error("nbar " + a.to_string() + " has a negative coefficient at " + b.to_string());
  }
  return memo_.emplace(a, std::move(work)).first->second;
}

LaurentPoly KLSession::n_poly(const Partition& la, const Partition& mu) {
  if (la.length() > ctx_.k || mu.length() > ctx_.k) throw std::invalid_argument("partition has more than k rows");
  if (!same_orbit(la, mu, ctx_)) return {};
  const Alcove top = a_plus_of_point(to_point(add_rho(mu, ctx_.k)), ctx_);
  const Alcove at = a_plus_of_point(to_point(add_rho(la, ctx_.k)), ctx_);
  if (top == at) return 1;
  return nbar(top).coeff(at);
}

std::vector<KLMismatch> compare_with_gcb(const Partition& mu, Session& gcb, KLSession& kl) {
  std::set<Partition, std::greater<>> targets;
  for (const Partition& la : orbit_members(mu, gcb.context()))
    if (dominance_leq(la, mu)) targets.insert(la);
  for (const auto& [la, p] : gcb.gcb(mu).entries()) targets.insert(la);

  std::vector<KLMismatch> out;
  for (const Partition& la : targets) {
    LaurentPoly d = gcb.d_poly(la, mu);
    LaurentPoly n = kl.n_poly(la, mu);
    if (d != n) out.push_back({la, std::move(d), std::move(n)});
  }
  return out;
}

}  // namespace cbt
