#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "cbt/partition.hpp"
#include "oracles.hpp"

using cbt::Context;
using cbt::Node;
using cbt::Partition;

TEST_CASE("construction and text format") {
  CHECK(Partition{3, 1, 0, 0}.parts() == std::vector<int>{3, 1});
  CHECK(Partition{}.to_string() == "0");
  CHECK(cbt::parse_partition("20,10,0,0") == Partition{20, 10});
  CHECK(cbt::parse_partition(" 2, 1 ") == Partition{2, 1});
  CHECK(cbt::parse_partition("0") == Partition{});
  CHECK_THROWS_AS(cbt::parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(cbt::parse_partition("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(cbt::parse_partition("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition{4, 2, 1}.size() == 7);
  CHECK(Partition{4, 2, 1}.row(3) == 1);
  CHECK(Partition{4, 2, 1}.row(4) == 0);
}

TEST_CASE("context validation") {
  CHECK_NOTHROW(Context{1, 2}.validate());
  CHECK_THROWS_AS((Context{0, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Context{2, 1}.validate()), std::invalid_argument);
}

TEST_CASE("residue uses content row minus column") {
  CHECK(cbt::residue({1, 1}, 5) == 0);
  CHECK(cbt::residue({1, 3}, 2) == 0);
  CHECK(cbt::residue({2, 1}, 3) == 1);
  CHECK(cbt::residue({1, 2}, 3) == 2);
}

TEST_CASE("boundary_nodes") {
  auto b = cbt::boundary_nodes(Partition{}, 2);
  CHECK(b.indents == std::vector<Node>{{1, 1}});
  CHECK(b.removables.empty());

  b = cbt::boundary_nodes(Partition{1}, 2, 1);
  CHECK(b.indents == std::vector<Node>{{1, 2}, {2, 1}});
  CHECK(b.removables.empty());

  b = cbt::boundary_nodes(Partition{2}, 2, 1);
  CHECK(b.removables == std::vector<Node>{{1, 2}});

  b = cbt::boundary_nodes(Partition{3, 3, 1}, 3);
  CHECK(b.removables == std::vector<Node>{{2, 3}, {3, 1}});
  CHECK(b.indents == std::vector<Node>{{1, 4}, {3, 2}, {4, 1}});
}

TEST_CASE("boundary_nodes yield valid diagrams and same-residue indents never share a row or column") {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Partition la = oracle::random_partition(rng, 1 + t % 25, 1 + t % 7);
    for (int l : {2, 3, 5}) {
      const auto b = cbt::boundary_nodes(la, l);
      for (const Node& n : b.removables) {
        std::vector<int> p = la.parts();
        --p[static_cast<std::size_t>(n.row - 1)];
        CHECK_NOTHROW(Partition{p});
        CHECK(n.col == la.row(n.row));
      }
      for (const Node& n : b.indents) {
        std::vector<int> p = la.parts();
        p.resize(static_cast<std::size_t>(la.length() + 1), 0);
        ++p[static_cast<std::size_t>(n.row - 1)];
        CHECK_NOTHROW(Partition{p});
      }
      for (int r = 0; r < l; ++r) {
        const auto f = cbt::boundary_nodes(la, l, r);
        std::set<int> rows, cols;
        for (const Node& n : f.indents) {
          CHECK(cbt::residue(n, l) == r);
          CHECK(rows.insert(n.row).second);
          CHECK(cols.insert(n.col).second);
        }
      }
    }
  }
}

TEST_CASE("orders") {
  auto o = cbt::orders(Partition{1, 1}, Partition{2});
  CHECK(o.dominance_leq);
  CHECK(o.lex_cmp == -1);
  o = cbt::orders(Partition{3, 1}, Partition{3, 1});
  CHECK(o.dominance_leq);
  CHECK(o.lex_cmp == 0);
  CHECK(cbt::dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(cbt::dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(cbt::dominance_leq(Partition{1}, Partition{2}));
  // Incomparable in dominance, ordered lexicographically.
  CHECK_FALSE(cbt::dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(cbt::dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  CHECK(cbt::lex_cmp(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == 1);
}

TEST_CASE("is_l_regular") {
  CHECK_FALSE(cbt::is_l_regular(Partition{1, 1}, 2));
  CHECK(cbt::is_l_regular(Partition{}, 2));
  CHECK(cbt::is_l_regular(Partition{2, 1}, 2));
  CHECK(cbt::is_l_regular(Partition{2, 2, 1}, 3));
  CHECK_FALSE(cbt::is_l_regular(Partition{2, 2, 2}, 3));
}

TEST_CASE("weights") {
  const Context c22{2, 2};
  CHECK(cbt::gaps(Partition{1}, 2) == std::vector<int>{2});
  CHECK(cbt::is_k_critical(Partition{1}, c22));
  CHECK(cbt::rho(3) == std::vector<int>{2, 1, 0});
  CHECK(cbt::add_rho(Partition{2}, 3) == std::vector<int>{4, 1, 0});
  CHECK(cbt::subtract_rho({4, 1, 0}) == Partition{2});
  CHECK_THROWS(cbt::subtract_rho({1, 2, 0}));

  // (l-1) rho is the smallest k-critical diagram.
  for (int k = 2; k <= 5; ++k)
    for (int l = 2; l <= 6; ++l) {
      std::vector<int> st;
      for (int x : cbt::rho(k)) st.push_back((l - 1) * x);
      CHECK(cbt::is_k_critical(Partition(st), Context{k, l}));
    }

  const Context c23{2, 3};
  CHECK(cbt::is_interior(Partition{4}, c23));
  CHECK(cbt::box_coords(Partition{4}, c23) == std::vector<int>{2});
  CHECK(cbt::critical_anchor(Partition{4}, c23) == Partition{2});
  CHECK(cbt::gaps(Partition{2}, 2) == std::vector<int>{3});
  CHECK_THROWS_WITH_AS(cbt::critical_anchor(Partition{1}, c23), "not interior", std::domain_error);

  CHECK(cbt::add_fundamental(Partition{3, 1}, 2, 2, 3) == Partition{5, 3});
  CHECK(cbt::add_fundamental(Partition{3, 2, 1}, 3, -1, 3) == Partition{2, 1});
  CHECK_THROWS(cbt::add_fundamental(Partition{3}, 2, -1, 3));
  CHECK_THROWS(cbt::add_fundamental(Partition{3}, 4, 1, 3));

  const auto w = cbt::weight_info(Partition{20, 10}, Context{4, 5});
  CHECK(w.gaps == std::vector<int>{11, 11, 1});
  CHECK_FALSE(w.k_critical);
  CHECK_FALSE(w.interior);
  CHECK_FALSE(w.critical_anchor.has_value());
}

TEST_CASE("interior diagrams decompose as anchor plus box") {
  std::mt19937 rng(22);
  int seen = 0;
  for (int t = 0; t < 2000 && seen < 300; ++t) {
    const Context ctx{2 + t % 4, 2 + t % 5};
    const Partition la = oracle::random_partition(rng, t % 60, ctx.k);
    if (!cbt::is_interior(la, ctx)) continue;
    ++seen;
    const Partition anchor = cbt::critical_anchor(la, ctx);
    const auto d = cbt::box_coords(la, ctx);
    CHECK(cbt::is_k_critical(anchor, ctx));
    Partition back = anchor;
    for (int i = 1; i < ctx.k; ++i) {
      CHECK(d[static_cast<std::size_t>(i - 1)] >= 0);
      CHECK(d[static_cast<std::size_t>(i - 1)] < ctx.l);
      back = cbt::add_fundamental(back, i, d[static_cast<std::size_t>(i - 1)], ctx.k);
    }
    CHECK(back == la);
  }
  CHECK(seen > 50);
}

TEST_CASE("partitions_of") {
  const auto ps = cbt::partitions_of(4, 2);
  CHECK(ps == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
  CHECK(cbt::partitions_of(0, 3) == std::vector<Partition>{Partition{}});
  CHECK(cbt::partitions_of(10, 10).size() == 42);
}

TEST_CASE("orbit_members") {
  const Context c22{2, 2}, c23{2, 3};
  CHECK(cbt::orbit_members(Partition{2}, c22) == std::vector<Partition>{{2}, {1, 1}});
  const auto o = cbt::orbit_members(Partition{2}, c23);
  CHECK(std::find(o.begin(), o.end(), Partition{1, 1}) == o.end());
  CHECK(std::find(o.begin(), o.end(), Partition{2}) != o.end());

  // Against permutation matching, and symmetry.
  for (int k = 1; k <= 4; ++k)
    for (int l = 2; l <= 4; ++l) {
      const Context ctx{k, l};
      for (int n = 0; n <= 9; ++n) {
        const auto all = cbt::partitions_of(n, k);
        for (const Partition& mu : all) {
          const auto orb = cbt::orbit_members(mu, ctx);
          CHECK(std::is_sorted(orb.begin(), orb.end(), std::greater<>()));
          for (const Partition& la : all) {
            const bool in = std::find(orb.begin(), orb.end(), la) != orb.end();
            CHECK(in == oracle::same_orbit_by_matching(la, mu, ctx));
            CHECK(cbt::same_orbit(la, mu, ctx) == cbt::same_orbit(mu, la, ctx));
          }
        }
      }
    }
}
