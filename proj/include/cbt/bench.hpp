#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cbt/partition.hpp"

namespace cbt {

enum class Algo { llt, fast, soergel };
std::string to_string(Algo a);
Algo parse_algo(const std::string& s);

struct BenchCase {
  Context ctx;
  Partition mu;
  std::vector<Algo> algos;
};

struct BenchResult {
  Algo algo;
  Context ctx;
  Partition mu;
  double seconds;
  // llt/fast: diagrams other than mu whose G had to be computed, i.e. memo
  // entries minus mu minus those known in closed form (k-critical).
  // soergel: alcoves other than the top one whose nbar was computed.
  std::size_t n_count;
};

// Runs one algorithm on a fresh session (no memo, no cache).
BenchResult run_bench(Algo algo, const Context& ctx, const Partition& mu);

// The four benchmark inputs; the last row is run in fast mode only.
std::vector<BenchCase> table1_suite();

}  // namespace cbt
