#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbt/serialize.hpp"
#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cbt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cbt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gcb") {
  Result r = cli({"gcb", "--k", "2", "--l", "2", "--mu", "2", "--algo", "fast", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "2: 1 | 1,1: v\n");
  for (const char* algo : {"llt", "soergel"}) {
    CHECK(cli({"gcb", "--k", "2", "--l", "2", "--mu", "2", "--algo", algo}).out == r.out);
  }

  r = cli({"gcb", "--k", "2", "--l", "2", "--mu", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("mu is not l-regular") != std::string::npos);

  r = cli({"gcb", "--k", "4", "--l", "5", "--mu", "20,10,0,0", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = cbt::ordered_json::parse(r.out);
  CHECK(j.is_object());
  CHECK(j.begin().key() == "20,10");
  const cbt::FockVector g = cbt::fock_from_json(j, cbt::Context{4, 5});
  CHECK(cbt::fock_to_json(g).dump() + "\n" == r.out);
  CHECK(g.coeff(cbt::Partition{20, 10}) == cbt::LaurentPoly(1));

  r = cli({"gcb", "--k", "2", "--l", "2", "--mu", "4", "--format", "csv"});
  CHECK(r.out == "lambda,coeff\n4,1\n\"3,1\",v\n");
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"gcb", "--k", "2"}).code == 1);
  CHECK(cli({"gcb", "--k", "0", "--l", "2", "--mu", "1"}).code == 1);
  CHECK(cli({"gcb", "--k", "2", "--l", "2", "--mu", "1,2"}).code == 1);
  CHECK(cli({"gcb", "--k", "1", "--l", "2", "--mu", "2,1"}).code == 1);
  CHECK(cli({"gcb", "--mu", "2", "--algo", "magic"}).code == 1);
  CHECK(cli({"compare", "--k", "2", "--l", "2"}).code == 1);
  CHECK(cli({"bench", "--suite", "nope"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("compare") {
  Result r = cli({"compare", "--k", "2", "--l", "2", "--mu", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);

  r = cli({"compare", "--k", "3", "--l", "2", "--sweep", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = cli({"compare", "--k", "2", "--l", "2", "--mu", "4", "--inject-fault", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.find("MISMATCH mu=4 lambda=3,1") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);

  r = cli({"compare", "--k", "2", "--l", "2", "--mu", "4", "--format", "json"});
  CHECK(cbt::ordered_json::parse(r.out)["status"] == "PASS");
}

TEST_CASE("bench") {
  Result r = cli({"bench", "--k", "4", "--l", "5", "--mu", "20,10,0,0", "--algo", "fast", "--algo", "llt"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, a, b, extra;
  std::getline(lines, header);
  std::getline(lines, a);
  std::getline(lines, b);
  CHECK(header == "algo,k,l,mu,seconds,n_count");
  CHECK(a.rfind("fast,4,5,\"20,10,0,0\",", 0) == 0);
  CHECK(b.rfind("llt,4,5,\"20,10,0,0\",", 0) == 0);
  CHECK_FALSE(std::getline(lines, extra));

  r = cli({"bench", "--k", "2", "--l", "2", "--mu", "4", "--format", "json"});
  const auto j = cbt::ordered_json::parse(r.out);
  CHECK(j.size() == 3);
  CHECK(j[2]["algo"] == "soergel");
}

TEST_CASE("decmat") {
  Result r = cli({"decmat", "--k", "2", "--l", "2", "--n", "2", "--at-one", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = cbt::ordered_json::parse(r.out);
  CHECK(j["entries"].dump() == "[[1],[1]]");
  CHECK(j["cols"].dump() == R"(["2"])");

  r = cli({"decmat", "--k", "2", "--l", "2", "--n", "4", "--format", "csv"});
  CHECK(r.out == "lambda,4,\"3,1\"\n4,1,0\n\"3,1\",v,1\n\"2,2\",0,v\n");
}

TEST_CASE("selftest") {
  const Result r = cli({"selftest", "--max-size", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("all ", 0) == 0);
  CHECK(r.out.find("properties passed") != std::string::npos);
}

TEST_CASE("cache flag and environment") {
  const auto path = std::filesystem::temp_directory_path() / "cbt_cli_cache.ndjson";
  std::filesystem::remove(path);
  const Result cold = cli({"gcb", "--k", "3", "--l", "3", "--mu", "7,3", "--cache", path.string()});
  CHECK(std::filesystem::exists(path));
  const Result warm = cli({"gcb", "--k", "3", "--l", "3", "--mu", "7,3", "--cache", path.string()});
  CHECK(cold.out == warm.out);
  std::filesystem::remove(path);
}
