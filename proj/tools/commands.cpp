#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbt/bench.hpp"
#include "cbt/cache.hpp"
#include "cbt/canonical.hpp"
#include "cbt/kl.hpp"
#include "cbt/paths.hpp"
#include "cbt/serialize.hpp"

namespace cbt::cli {

namespace {

// A usage error discovered after parsing (bad partition, missing input).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// A verification failure; the report has already been printed.
struct VerificationFailed {};

struct Options {
  int k = 2;
  int l = 2;
  std::string mu;
  std::string algo = "fast";
  std::string format = "text";
  std::string cache;
  int sweep = -1;
  std::string suite;
  int n = -1;
  bool at_one = false;
  int max_size = 6;
  int inject_fault = -1;
};

Context context_of(const Options& o) {
  Context ctx{o.k, o.l};
  try {
    ctx.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return ctx;
}

Partition mu_of(const Options& o, const Context& ctx) {
  if (o.mu.empty()) throw UsageError("--mu is required");
  Partition mu;
  try {
    mu = parse_partition(o.mu);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (mu.length() > ctx.k) throw UsageError("mu has more than k rows");
  if (!is_l_regular(mu, ctx.l)) throw UsageError("mu is not l-regular");
  return mu;
}

std::unique_ptr<GcbCache> open_cache(const Options& o) {
  std::string path = o.cache;
  if (path.empty())
    if (const char* env = std::getenv("CBT_CACHE")) path = env;
  if (path.empty()) return nullptr;
  return std::make_unique<GcbCache>(path);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// mu padded with zeros to k parts, as in "20,10,0,0".
std::string padded(const Partition& mu, int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) s += (i > 1 ? "," : "") + std::to_string(mu.row(i));
  return s;
}

FockVector soergel_vector(const Partition& mu, KLSession& kl) {
  const Context& ctx = kl.context();
  FockVector out(ctx);
  for (const Partition& la : orbit_members(mu, ctx))
    if (dominance_leq(la, mu)) out.add(la, kl.n_poly(la, mu));
  return out;
}

void render_vector(const FockVector& g, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << fock_to_json(g).dump() << '\n';
  } else if (format == "csv") {
    out << "lambda,coeff\n";
    for (const auto& [la, p] : g.entries()) out << csv_field(la.to_string()) << ',' << csv_field(p.to_string()) << '\n';
  } else {
    bool first = true;
    for (const auto& [la, p] : g.entries()) {
      out << (first ? "" : " | ") << la.to_string() << ": " << p.to_string();
      first = false;
    }
    out << '\n';
  }
}

void cmd_gcb(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  const Partition mu = mu_of(o, ctx);
  const Algo algo = parse_algo(o.algo);
  if (algo == Algo::soergel) {
    KLSession kl(ctx);
    render_vector(soergel_vector(mu, kl), o.format, out);
    return;
  }
  auto cache = open_cache(o);
  Session s(ctx, algo == Algo::llt ? Mode::llt : Mode::fast, cache.get());
  render_vector(s.gcb(mu), o.format, out);
}

struct CompareStats {
  std::size_t diagrams = 0;
  std::size_t coefficients = 0;
  std::vector<std::string> mismatches;
};

void compare_one(const Partition& mu, Session& llt, Session& fast, KLSession& kl, int fault, CompareStats& st) {
  FockVector gf = fast.gcb(mu);
  if (fault >= 0 && !gf.is_zero()) {
    auto it = gf.entries().begin();
    std::advance(it, static_cast<long>(static_cast<std::size_t>(fault) % gf.support_size()));
    gf.add(it->first, LaurentPoly::v());
  }
  const FockVector& gl = llt.gcb(mu);
  std::set<Partition, std::greater<>> targets;
  for (const Partition& la : orbit_members(mu, llt.context()))
    if (dominance_leq(la, mu)) targets.insert(la);
  for (const auto& [la, p] : gl.entries()) targets.insert(la);
  for (const auto& [la, p] : gf.entries()) targets.insert(la);
  ++st.diagrams;
  for (const Partition& la : targets) {
    ++st.coefficients;
    const LaurentPoly a = gl.coeff(la), b = gf.coeff(la), c = kl.n_poly(la, mu);
    if (a == b && b == c) continue;
    st.mismatches.push_back("mu=" + mu.to_string() + " lambda=" + la.to_string() + " llt=" + a.to_string() +
                            " fast=" + b.to_string() + " soergel=" + c.to_string());
  }
}

void cmd_compare(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  std::vector<Partition> mus;
  if (o.sweep >= 0) {
    if (!o.mu.empty()) throw UsageError("--mu and --sweep are exclusive");
    for (int n = 0; n <= o.sweep; ++n)
      for (const Partition& mu : partitions_of(n, ctx.k))
        if (is_l_regular(mu, ctx.l)) mus.push_back(mu);
  } else {
    mus.push_back(mu_of(o, ctx));
  }
  auto cache = open_cache(o);
  Session llt(ctx, Mode::llt, cache.get()), fast(ctx, Mode::fast, cache.get());
  KLSession kl(ctx);
  CompareStats st;
  for (const Partition& mu : mus) compare_one(mu, llt, fast, kl, o.inject_fault, st);

  const bool pass = st.mismatches.empty();
  if (o.format == "json") {
    ordered_json j;
    j["status"] = pass ? "PASS" : "FAIL";
    j["diagrams"] = st.diagrams;
    j["coefficients"] = st.coefficients;
    j["mismatches"] = st.mismatches;
    out << j.dump() << '\n';
  } else {
    for (const std::string& m : st.mismatches) out << "MISMATCH " << m << '\n';
    out << (pass ? "PASS" : "FAIL") << " (" << st.diagrams << " diagrams, " << st.coefficients << " coefficients";
    if (!pass) out << ", " << st.mismatches.size() << " mismatches";
    out << ")\n";
  }
  if (!pass) throw VerificationFailed{};
}

void cmd_bench(const Options& o, const std::vector<std::string>& algos, std::ostream& out) {
  std::vector<BenchCase> cases;
  if (!o.suite.empty()) {
    if (o.suite != "table1") throw UsageError("unknown suite '" + o.suite + "'");
    cases = table1_suite();
  } else {
    const Context ctx = context_of(o);
    BenchCase c{ctx, mu_of(o, ctx), {}};
    if (algos.empty()) c.algos = {Algo::llt, Algo::fast, Algo::soergel};
    for (const std::string& a : algos) c.algos.push_back(parse_algo(a));
    cases.push_back(std::move(c));
  }
  const std::string format = o.format == "text" ? "csv" : o.format;
  ordered_json rows = ordered_json::array();
  if (format == "csv") out << "algo,k,l,mu,seconds,n_count\n";
  for (const BenchCase& c : cases) {
    for (Algo a : c.algos) {
      const BenchResult r = run_bench(a, c.ctx, c.mu);
      if (format == "json") {
        ordered_json j;
        j["algo"] = to_string(r.algo);
        j["k"] = r.ctx.k;
        j["l"] = r.ctx.l;
        j["mu"] = padded(r.mu, r.ctx.k);
        j["seconds"] = r.seconds;
        j["n_count"] = r.n_count;
        rows.push_back(std::move(j));
      } else {
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(6) << r.seconds;
        out << to_string(r.algo) << ',' << r.ctx.k << ',' << r.ctx.l << ',' << csv_field(padded(r.mu, r.ctx.k)) << ','
            << secs.str() << ',' << r.n_count << '\n'
            << std::flush;
      }
    }
  }
  if (format == "json") out << rows.dump() << '\n';
}

void cmd_decmat(const Options& o, std::ostream& out) {
  const Context ctx = context_of(o);
  if (o.n < 0) throw UsageError("--n is required");
  auto cache = open_cache(o);
  Session s(ctx, parse_algo(o.algo) == Algo::llt ? Mode::llt : Mode::fast, cache.get());
  const DecMatrix m = dec_matrix(o.n, s, o.at_one);
  auto cell = [&](const LaurentPoly& p) { return p.to_string(); };
  if (o.format == "json") {
    ordered_json j;
    ordered_json rows = ordered_json::array(), cols = ordered_json::array(), entries = ordered_json::array();
    for (const Partition& p : m.rows) rows.push_back(p.to_string());
    for (const Partition& p : m.cols) cols.push_back(p.to_string());
    for (const auto& row : m.entries) {
      ordered_json r = ordered_json::array();
      for (const LaurentPoly& p : row) {
        if (o.at_one) r.push_back(p.is_zero() ? 0 : p.coeff(0));
        else r.push_back(poly_to_json(p));
      }
      entries.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    j["entries"] = std::move(entries);
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "lambda";
    for (const Partition& c : m.cols) out << ',' << csv_field(c.to_string());
    out << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      out << csv_field(m.rows[i].to_string());
      for (const LaurentPoly& p : m.entries[i]) out << ',' << csv_field(cell(p));
      out << '\n';
    }
  } else {
    std::size_t width = 6;
    for (const Partition& p : m.rows) width = std::max(width, p.to_string().size());
    for (const auto& row : m.entries)
      for (const LaurentPoly& p : row) width = std::max(width, cell(p).size());
    out << std::setw(static_cast<int>(width)) << "";
    for (const Partition& c : m.cols) out << "  " << std::setw(static_cast<int>(width)) << c.to_string();
    out << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      out << std::setw(static_cast<int>(width)) << m.rows[i].to_string();
      for (const LaurentPoly& p : m.entries[i]) out << "  " << std::setw(static_cast<int>(width)) << cell(p);
      out << '\n';
    }
  }
}

void cmd_selftest(const Options& o, std::ostream& out) {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };
  for (int k : {2, 3})
    for (int l : {2, 3}) {
      const Context ctx{k, l};
      Session llt(ctx, Mode::llt), fast(ctx, Mode::fast);
      KLSession kl(ctx);
      const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " mu=";
      for (int n = 0; n <= o.max_size; ++n)
        for (const Partition& mu : partitions_of(n, k)) {
          if (!is_l_regular(mu, l)) continue;
          const FockVector& gf = fast.gcb(mu);
          check(!check_gcb_invariants(gf, mu), tag + mu.to_string() + " structure");
          check(gf == llt.gcb(mu), tag + mu.to_string() + " llt agrees with fast");
          check(compare_with_gcb(mu, fast, kl).empty(), tag + mu.to_string() + " KL agrees");
          const Partition shifted = add_fundamental(mu, k, 1, k);
          if (is_l_regular(shifted, l))
            check(llt.gcb(shifted) == llt.gcb(mu).column_shifted(1), tag + mu.to_string() + " column shift");
          // Ladder and box paths only satisfy the weak form of (L) in general.
          const Construction c = plan_construction(mu, ctx, Mode::fast);
          if (!c.path.chain.empty())
            check(check_weak_property_L(c.path, ctx), tag + mu.to_string() + " weak property (L)");
        }
    }
  for (const std::string& f : failures) out << "FAILED " << f << '\n';
  if (!failures.empty()) {
    out << failures.size() << " of " << checks << " properties failed\n";
    throw VerificationFailed{};
  }
  out << "all " << checks << " properties passed\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated canonical basis of the level-1 Fock space: LLT, fast and affine KL algorithms", "cbt"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> bench_algos;

  auto add_ctx = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "maximal number of rows")->capture_default_str();
    sub->add_option("--l", o.l, "level (quantum characteristic)")->capture_default_str();
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", o.cache, "persistent cache file (default: $CBT_CACHE)");
  };
  const std::vector<std::string> formats{"text", "json", "csv"};

  CLI::App* gcb = app.add_subcommand("gcb", "print the coefficients of G(mu)");
  add_ctx(gcb);
  gcb->add_option("--mu", o.mu, "partition, e.g. 20,10,0,0")->required();
  gcb->add_option("--algo", o.algo, "llt | fast | soergel")->check(CLI::IsMember({"llt", "fast", "soergel"}))->capture_default_str();
  gcb->add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember(formats))->capture_default_str();
  add_cache(gcb);

  CLI::App* compare = app.add_subcommand("compare", "cross-check llt, fast and soergel");
  add_ctx(compare);
  compare->add_option("--mu", o.mu, "single partition to check");
  compare->add_option("--sweep", o.sweep, "check every l-regular mu of size <= N");
  compare->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  compare->add_option("--inject-fault", o.inject_fault)->group("");
  add_cache(compare);

  CLI::App* bench = app.add_subcommand("bench", "time the algorithms on fresh sessions");
  add_ctx(bench);
  bench->add_option("--mu", o.mu, "partition");
  bench->add_option("--algo", bench_algos, "algorithms to run (repeatable; default all)")
      ->check(CLI::IsMember({"llt", "fast", "soergel"}));
  bench->add_option("--suite", o.suite, "built-in input set: table1");
  bench->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* decmat = app.add_subcommand("decmat", "decomposition matrix for partitions of n");
  add_ctx(decmat);
  decmat->add_option("--n", o.n, "size of the partitions")->required();
  decmat->add_flag("--at-one", o.at_one, "specialise v = 1");
  decmat->add_option("--algo", o.algo, "llt | fast")->check(CLI::IsMember({"llt", "fast"}))->capture_default_str();
  decmat->add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember(formats))->capture_default_str();
  add_cache(decmat);

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite on small inputs");
  selftest->add_option("--max-size", o.max_size, "largest |mu| checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gcb) cmd_gcb(o, out);
    else if (*compare) cmd_compare(o, out);
    else if (*bench) cmd_bench(o, bench_algos, out);
    else if (*decmat) cmd_decmat(o, out);
    else if (*selftest) cmd_selftest(o, out);
    return kOk;
  } catch (const VerificationFailed&) {
    return kFail;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cbt::cli
