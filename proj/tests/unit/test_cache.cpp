#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cbt/cache.hpp"
#include "cbt/canonical.hpp"

using cbt::Context;
using cbt::GcbCache;
using cbt::Mode;
using cbt::Partition;
using cbt::Session;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cache file format") {
  TempFile f("cbt_cache_format.ndjson");
  {
    GcbCache cache(f.path.string());
    CHECK(cache.size() == 0);
    Session s(Context{2, 2}, Mode::fast, &cache);
    s.gcb(Partition{2});
  }
  const std::string text = slurp(f.path);
  CHECK(text.rfind(R"({"format":"cbt-gcb-cache","version":1})" "\n", 0) == 0);
  CHECK(text.find(R"({"k":2,"l":2,"mode":"fast","mu":[2],"g":[{"la":[2],"p":{"0":1}},{"la":[1,1],"p":{"1":1}}]})") !=
        std::string::npos);
}

TEST_CASE("warm cache gives identical results without recomputation") {
  TempFile f("cbt_cache_warm.ndjson");
  const Context ctx{3, 3};
  const Partition mu{9, 5, 1};
  cbt::FockVector cold(ctx);
  std::size_t cold_count = 0;
  {
    GcbCache cache(f.path.string());
    Session s(ctx, Mode::llt, &cache);
    cold = s.gcb(mu);
    cold_count = s.computed_count();
    CHECK(cache.size() == cold_count);
  }
  GcbCache cache(f.path.string());
  CHECK(cache.size() == cold_count);
  CHECK(cache.skipped() == 0);
  Session warm(ctx, Mode::llt, &cache);
  CHECK(warm.gcb(mu) == cold);
  CHECK(warm.computed_count() == 0);
  CHECK(warm.cache_hits() == 1);
  // Other modes do not share entries.
  Session other(ctx, Mode::fast, &cache);
  CHECK(other.gcb(mu) == cold);
  CHECK(other.computed_count() > 0);
}

TEST_CASE("corrupt records are skipped or rejected") {
  TempFile f("cbt_cache_corrupt.ndjson");
  {
    std::ofstream out(f.path);
    out << R"({"format":"cbt-gcb-cache","version":1})" << '\n'
        << "not json\n"
        // Violates the invariants: coefficient at mu is v.
        << R"({"k":2,"l":2,"mode":"fast","mu":[2],"g":[{"la":[2],"p":{"1":1}}]})" << '\n';
  }
  GcbCache cache(f.path.string());
  CHECK(cache.skipped() == 1);
  CHECK(cache.size() == 1);
  Session s(Context{2, 2}, Mode::fast, &cache);
  CHECK(s.gcb(Partition{2}).coeff(Partition{2}) == cbt::LaurentPoly(1));
  CHECK(s.cache_hits() == 0);
  Session fresh(Context{2, 2}, Mode::fast);
  fresh.gcb(Partition{2});
  CHECK(s.computed_count() == fresh.computed_count());
}

TEST_CASE("bad headers are errors") {
  TempFile f("cbt_cache_header.ndjson");
  {
    std::ofstream out(f.path);
    out << R"({"format":"cbt-gcb-cache","version":99})" << '\n';
  }
  CHECK_THROWS_AS(GcbCache(f.path.string()), std::runtime_error);
  {
    std::ofstream out(f.path);
    out << "hello\n";
  }
  CHECK_THROWS_AS(GcbCache(f.path.string()), std::runtime_error);
}
