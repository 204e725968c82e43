#include "cbt/bench.hpp"

#include <chrono>
#include <stdexcept>

#include "cbt/canonical.hpp"
#include "cbt/kl.hpp"

namespace cbt {

std::string to_string(Algo a) {
  switch (a) {
    case Algo::llt: return "llt";
    case Algo::fast: return "fast";
    case Algo::soergel: return "soergel";
  }
  return "?";
}

Algo parse_algo(const std::string& s) {
  if (s == "llt") return Algo::llt;
  if (s == "fast") return Algo::fast;
  if (s == "soergel") return Algo::soergel;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

BenchResult run_bench(Algo algo, const Context& ctx, const Partition& mu) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::size_t n = 0;
  if (algo == Algo::soergel) {
    if (!is_l_regular(mu, ctx.l)) throw std::invalid_argument("mu is not l-regular");
    KLSession kl(ctx);
    kl.nbar(a_plus_of_point(to_point(add_rho(mu, ctx.k)), ctx));
    n = kl.computed_count() - 1;
  } else {
    Session s(ctx, algo == Algo::llt ? Mode::llt : Mode::fast);
    s.gcb(mu);
    n = s.computed_count() - s.closed_form_count();
    const bool mu_closed = plan_construction(mu, ctx, s.mode()).kind == ConstructionKind::critical;
    if (!mu_closed && s.is_memoized(mu)) --n;
  }
  const double secs = std::chrono::duration<double>(clock::now() - t0).count();
  return BenchResult{algo, ctx, mu, secs, n};
}

std::vector<BenchCase> table1_suite() {
  const std::vector<Algo> all{Algo::llt, Algo::fast, Algo::soergel};
  return {
      {{4, 5}, Partition{20, 10, 0, 0}, all},
      {{4, 5}, Partition{40, 20, 0, 0}, all},
      {{5, 6}, Partition{36, 24, 12, 0, 0}, all},
      {{5, 6}, Partition{72, 48, 24, 0, 0}, {Algo::fast}},
  };
}

}  // namespace cbt
