#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbt/partition.hpp"

namespace cbt {

using Point = std::vector<std::int64_t>;

Point to_point(const std::vector<int>& x);

// w = (sigma, t) acting on Z^k at level l by
//   (w x)_i = x_{sigma^{-1}(i)} + l t_i,   sum t_i = 0.
// sigma is stored 0-based as sigma[j] = sigma(j).
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  // Throws unless sigma is a permutation and t sums to zero.
  AffineWeylElement(std::vector<int> sigma, std::vector<int> t);

  static AffineWeylElement identity(int k);
  // Reflections in the walls of A+: s_i (1 <= i < k) in x_i = x_{i+1},
  // s_0 in x_1 - x_k = l.
  static AffineWeylElement generator(int s, int k);

  int rank() const { return static_cast<int>(sigma_.size()); }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& translation() const { return t_; }

  Point act(const Point& x, std::int64_t level) const;

  friend AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);
  friend AffineWeylElement inverse(const AffineWeylElement& w);
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> t_;
};

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& w);

// An alcove w A+, identified by d_ij = floor((x_i - x_j) / l) over any
// interior point x, for i < j. Ordered and hashed by that table.
class Alcove {
 public:
  explicit Alcove(AffineWeylElement w);
  static Alcove fundamental(int k) { return Alcove(AffineWeylElement::identity(k)); }

  const AffineWeylElement& element() const { return elem_; }
  const std::vector<int>& dmat() const { return dmat_; }
  int rank() const { return elem_.rank(); }
  // 1-based, i < j.
  int d(int i, int j) const;
  bool in_positive_chamber() const;
  std::string to_string() const;

  friend bool operator==(const Alcove& a, const Alcove& b) { return a.dmat_ == b.dmat_; }
  friend auto operator<=>(const Alcove& a, const Alcove& b) { return a.dmat_ <=> b.dmat_; }

 private:
  AffineWeylElement elem_;
  std::vector<int> dmat_;
};

struct AlcoveHash {
  std::size_t operator()(const Alcove& a) const noexcept;
};

// Index of pair (i, j), 1 <= i < j <= k, in the row-major d table.
std::size_t pair_index(int i, int j, int k);

// The alcove containing x; throws std::domain_error for a point on a wall.
Alcove alcove_of_point(const Point& x, const Context& ctx);
// The alcove containing x in its closure on the positive side of every
// wall through x (the limit of x + t(k-1, ..., 1, 0) as t -> 0+).
Alcove a_plus_of_point(const Point& x, const Context& ctx);

enum class Relation { succ, prec };

struct Step {
  Alcove alcove;
  Relation relation;  // succ: the new alcove is on the positive side
  bool in_chamber;
};
// A s for the generator s (0 <= s < k).
Step right_multiply(const Alcove& a, int s);

// Number of walls separating a chamber alcove from A+.
int separation_length(const Alcove& a);

struct Wall {
  int i;
  int j;
  std::int64_t m;  // x_i - x_j = m l
  friend bool operator==(const Wall&, const Wall&) = default;
  friend auto operator<=>(const Wall&, const Wall&) = default;
};

// The open face containing x: the walls through it and the strip index of
// every other pair. Depends only on x / l, so it is unchanged by rescaling
// the point together with the level.
struct Face {
  std::vector<Wall> walls;
  std::vector<std::optional<std::int64_t>> off_wall;  // per pair; empty on a wall
  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};
Face face_signature(const Point& x, const Context& ctx);

// Reflection of x in the hyperplane x_i - x_j = m l.
Point reflect_point(const Point& x, const Wall& w, int l);

// The wall shared by two adjacent alcoves, if they are adjacent.
std::optional<Wall> common_wall(const Alcove& a, const Alcove& b);

}  // namespace cbt
