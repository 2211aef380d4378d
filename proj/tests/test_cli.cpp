#include "doctest.h"

#include "hookdiff/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hookdiff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hookdiff::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stat") {
  const Run r = run({"stat", "--partition", "2,1,1", "--alpha", "1", "--beta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "h_{1,1}(2,1,1) = 2\ncells: (1,1) (2,1)\n");
  const Run big = run({"stat", "--partition", "8,7,5,3,2,1", "--alpha", "1", "--beta", "1", "--json"});
  CHECK(big.code == 0);
  const auto doc = nlohmann::json::parse(big.out);
  CHECK(doc["value"] == 0);
  CHECK(doc["cells"].empty());
  CHECK(run({"stat", "--partition", "-"}).out == "h_{1,1}(-) = 0\ncells: none\n");
}

TEST_CASE("core and quotient") {
  const Run r = run({"core", "--m", "2", "--partition", "8,7,5,3,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4,3,2,1\n");
  const Run q = run({"quotient", "--m", "2", "--partition", "5,4,1", "--json"});
  CHECK(q.code == 0);
  const auto doc = nlohmann::json::parse(q.out);
  CHECK(doc["shift"] == nlohmann::json::array({2, -2}));
  CHECK(doc["quotient"] == nlohmann::json::array({"1,1", "-"}));
}

TEST_CASE("words and catalan") {
  const Run w = run({"words", "--m", "4", "--partition", "16,6,6,6,5", "--json"});
  CHECK(w.code == 0);
  const auto doc = nlohmann::json::parse(w.out);
  CHECK(doc["inversions"] == 3);
  CHECK(doc["words"][3] == "NENEE");
  const Run c = run({"catalan", "--n", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("C_3(q) = 1 + 2*q + q^2 + q^3") != std::string::npos);
  CHECK(c.out.find("C_3(1) = 5") != std::string::npos);
}

TEST_CASE("series") {
  const Run s = run({"series", "--id", "bf-main", "--qmax", "4"});
  CHECK(s.code == 0);
  CHECK(s.out == "(1) + (1)*q + (1 + t)*q^2 + (2 + t)*q^3 + (2 + 2*t + t^2)*q^4 + O(q^5)\n");
  const Run j = run({"series", "--id", "two-core-count", "--qmax", "3", "--param", "j=1", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["triples"] == nlohmann::json::parse(R"([[1,0,"1"],[3,0,"2"]])"));
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--id", "bf-main", "--qmax", "18", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["status"] == "verified");

  const Run m = run({"verify", "--id", "bf-main", "--qmax", "8", "--param", "mutate=1", "--json", "--seedless"});
  CHECK(m.code == 1);
  const auto doc = nlohmann::json::parse(m.out);
  CHECK(doc["first_mismatch"]["q"] == 2);
  CHECK(doc.dump(2) + "\n" == m.out);  // round trip is byte-identical

  // Same argv, same bytes, regardless of the shard count.
  const std::vector<std::string> args{"--seedless", "--json", "verify", "--id", "genhook20", "--qmax", "12",
                                      "--param", "j=1", "--with-series"};
  const Run a = run(args);
  CHECK(a.code == 0);
  CHECK(run(args).out == a.out);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(run(threaded).out == a.out);
}

TEST_CASE("conjecture and list-identities") {
  const Run c = run({"conjecture", "--name", "cj1", "--nmax", "10", "--param", "j=0", "--seedless"});
  CHECK(c.code == 0);
  CHECK(c.out.find("holds-to-bound") != std::string::npos);
  const Run l = run({"list-identities"});
  CHECK(l.code == 0);
  CHECK(l.out.find("bf-main") != std::string::npos);
  CHECK(l.out.find("cj1 [conjecture]") != std::string::npos);
  CHECK(nlohmann::json::parse(run({"list-identities", "--json"}).out).is_array());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"core", "--m", "2"}).code == 2);
  CHECK(run({"core", "--m", "2", "--partition", "1,2"}).code == 2);
  CHECK(run({"core", "--m", "1", "--partition", "1"}).code == 2);
  CHECK(run({"verify", "--id", "nope"}).code == 2);
  CHECK(run({"verify", "--id", "bf-main", "--bogus"}).code == 2);
  CHECK(run({"verify", "--id", "multisum", "--param", "m"}).code == 2);
  CHECK(run({"conjecture", "--name", "bf-main"}).code == 2);
  const Run e = run({"stat"});
  CHECK(e.err.find("Usage") != std::string::npos);
}
