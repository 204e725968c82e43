#include "cbt/alcove.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cbt {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) inv[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return inv;
}

// Returns w with x = w y for some y in the open fundamental alcove at this
// level. x must lie on no wall.
AffineWeylElement reduce_to_fundamental(Point x, std::int64_t level) {
  const int k = static_cast<int>(x.size());
  AffineWeylElement w = AffineWeylElement::identity(k);
  while (true) {
    int s = -1;
    for (int i = 1; i < k && s < 0; ++i)
      if (x[static_cast<std::size_t>(i - 1)] < x[static_cast<std::size_t>(i)]) s = i;
    if (s < 0 && k > 1 && x.front() - x.back() > level) s = 0;
    if (s < 0) break;
    const AffineWeylElement g = AffineWeylElement::generator(s, k);
    x = g.act(x, level);
    w = compose(w, g);
  }
  return w;
}

}  // namespace

Point to_point(const std::vector<int>& x) { return Point(x.begin(), x.end()); }

AffineWeylElement::AffineWeylElement(std::vector<int> sigma, std::vector<int> t)
    : sigma_(std::move(sigma)), t_(std::move(t)) {
  if (sigma_.size() != t_.size()) throw std::invalid_argument("sigma and t differ in length");
  std::vector<int> sorted = sigma_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("sigma is not a permutation");
  if (std::accumulate(t_.begin(), t_.end(), 0) != 0)
    throw std::invalid_argument("translation must lie in the root lattice");
}

AffineWeylElement AffineWeylElement::identity(int k) {
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  return AffineWeylElement(std::move(sigma), std::vector<int>(static_cast<std::size_t>(k), 0));
}

AffineWeylElement AffineWeylElement::generator(int s, int k) {
  if (k < 2 || s < 0 || s >= k) throw std::invalid_argument("generator index out of range");
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  if (s == 0) {
    std::swap(sigma.front(), sigma.back());
    t.front() = 1;
    t.back() = -1;
  } else {
    std::swap(sigma[static_cast<std::size_t>(s - 1)], sigma[static_cast<std::size_t>(s)]);
  }
  return AffineWeylElement(std::move(sigma), std::move(t));
}

Point AffineWeylElement::act(const Point& x, std::int64_t level) const {
  if (static_cast<int>(x.size()) != rank()) throw std::invalid_argument("point has wrong dimension");
  const std::vector<int> inv = inverse_perm(sigma_);
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = x[static_cast<std::size_t>(inv[i])] + level * t_[i];
  return y;
}

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
  const std::size_t k = a.sigma_.size();
  const std::vector<int> ainv = inverse_perm(a.sigma_);
  std::vector<int> sigma(k), t(k);
  for (std::size_t j = 0; j < k; ++j) sigma[j] = a.sigma_[static_cast<std::size_t>(b.sigma_[j])];
  for (std::size_t i = 0; i < k; ++i) t[i] = a.t_[i] + b.t_[static_cast<std::size_t>(ainv[i])];
  return AffineWeylElement(std::move(sigma), std::move(t));
}

AffineWeylElement inverse(const AffineWeylElement& w) {
  const std::size_t k = w.sigma_.size();
  std::vector<int> t(k);
  for (std::size_t j = 0; j < k; ++j) t[j] = -w.t_[static_cast<std::size_t>(w.sigma_[j])];
  return AffineWeylElement(inverse_perm(w.sigma_), std::move(t));
}

std::size_t pair_index(int i, int j, int k) {
  // Pairs (1,2), (1,3), ..., (1,k), (2,3), ...
  const int before = (i - 1) * k - (i - 1) * i / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

Alcove::Alcove(AffineWeylElement w) : elem_(std::move(w)) {
  const int k = elem_.rank();
  const std::vector<int> inv = inverse_perm(elem_.sigma());
  const auto& t = elem_.translation();
  dmat_.reserve(static_cast<std::size_t>(k * (k - 1) / 2));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      dmat_.push_back(t[ii] - t[jj] - (inv[ii] < inv[jj] ? 0 : 1));
    }
}

int Alcove::d(int i, int j) const { return dmat_[pair_index(i, j, rank())]; }

bool Alcove::in_positive_chamber() const {
  return std::all_of(dmat_.begin(), dmat_.end(), [](int d) { return d >= 0; });
}

std::string Alcove::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dmat_.size(); ++i) os << (i ? "," : "") << dmat_[i];
  os << ']';
  return os.str();
}

std::size_t AlcoveHash::operator()(const Alcove& a) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (int x : a.dmat()) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Alcove alcove_of_point(const Point& x, const Context& ctx) {
  if (static_cast<int>(x.size()) != ctx.k) throw std::invalid_argument("point has wrong dimension");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if ((x[i] - x[j]) % ctx.l == 0) throw std::domain_error("point is singular; use a_plus_of_point");
  return Alcove(reduce_to_fundamental(x, ctx.l));
}

Alcove a_plus_of_point(const Point& x, const Context& ctx) {
  const int k = ctx.k;
  if (static_cast<int>(x.size()) != k) throw std::invalid_argument("point has wrong dimension");
  // k x + (k-1, ..., 0) at level k l is off every wall and sits in the
  // alcove reached from x by the infinitesimal push along rho.
  Point scaled(x.size());
  for (int i = 0; i < k; ++i)
    scaled[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(k) * x[static_cast<std::size_t>(i)] + (k - 1 - i);
  return Alcove(reduce_to_fundamental(std::move(scaled), static_cast<std::int64_t>(k) * ctx.l));
}

Step right_multiply(const Alcove& a, int s) {
  Alcove b(compose(a.element(), AffineWeylElement::generator(s, a.rank())));
  Relation rel = Relation::succ;
  for (std::size_t p = 0; p < a.dmat().size(); ++p) {
    if (a.dmat()[p] != b.dmat()[p]) {
      rel = b.dmat()[p] > a.dmat()[p] ? Relation::succ : Relation::prec;
      break;
    }
  }
  const bool chamber = b.in_positive_chamber();
  return Step{std::move(b), rel, chamber};
}

int separation_length(const Alcove& a) {
  int n = 0;
  for (int d : a.dmat()) n += d < 0 ? -d : d;
  return n;
}

Face face_signature(const Point& x, const Context& ctx) {
  Face f;
  const int k = ctx.k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::int64_t diff = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      if (diff % ctx.l == 0) {
        f.walls.push_back({i + 1, j + 1, diff / ctx.l});
        f.off_wall.emplace_back(std::nullopt);
      } else {
        f.off_wall.emplace_back(floor_div(diff, ctx.l));
      }
    }
  return f;
}

Point reflect_point(const Point& x, const Wall& w, int l) {
  Point y = x;
  const auto i = static_cast<std::size_t>(w.i - 1), j = static_cast<std::size_t>(w.j - 1);
  const std::int64_t excess = x[i] - x[j] - w.m * l;
  y[i] -= excess;
  y[j] += excess;
  return y;
}

std::optional<Wall> common_wall(const Alcove& a, const Alcove& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  std::optional<Wall> wall;
  const int k = a.rank();
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const int da = a.d(i, j), db = b.d(i, j);
      if (da == db) continue;
      if (wall || std::abs(da - db) != 1) return std::nullopt;
      wall = Wall{i, j, std::max(da, db)};
    }
  return wall;
}

}  // namespace cbt
