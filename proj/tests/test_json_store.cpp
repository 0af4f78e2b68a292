#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "polyadica/error.hpp"
#include "polyadica/json_io.hpp"
#include "polyadica/solution_store.hpp"

using namespace polyadica;
namespace fs = std::filesystem;

namespace {

fs::path fresh_path(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("polyadica_test_" + name + ".jsonl");
  fs::remove(p);
  return p;
}

json::SolutionRecord cubes() {
  return {{RingKind::kExotic32, 0, 0}, 2, 0, 1, {{BigInt(5)}, {BigInt(4), BigInt(2), BigInt(3)}}, BigInt(215)};
}

}  // namespace

TEST_CASE("big integers survive a round trip") {
  const BigInt huge("123456789012345678901234567890");
  CHECK(json::read_big(json::big(huge)) == huge);
  CHECK(json::read_big(json::Json(-17)) == -17);
  CHECK(json::read_big(json::Json("-17")) == -17);
  CHECK_THROWS_AS(json::read_big(json::Json("12x")), Error);
  CHECK_THROWS_AS(json::read_big(json::Json(1.5)), Error);
  const Elements xs{BigInt(1), -huge};
  CHECK(json::read_big_list(json::big_list(xs)) == xs);
}

TEST_CASE("descriptors and records round-trip") {
  for (const RingDescriptor d : {RingDescriptor{RingKind::kExotic32, 0, 0}, RingDescriptor{RingKind::kCongruence, 4, 5},
                                 RingDescriptor{RingKind::kBinaryZ, 0, 0}}) {
    CHECK(json::read_descriptor(json::to_json(d)) == d);
  }
  const auto r = cubes();
  CHECK(json::read_solution(json::to_json(r)) == r);
  auto no_sum = r;
  no_sum.sum.reset();
  CHECK(json::read_solution(json::parse(json::to_json(no_sum).dump())) == no_sum);
}

TEST_CASE("multigrade round trip recomputes the degree") {
  auto j = json::parse(R"({"left":[1,4],"right":[2,3],"degree":9})");
  const auto m = json::read_multigrade(j);
  CHECK(m.degree == 1);
}

TEST_CASE("parse errors") {
  try {
    json::parse("{not json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
  CHECK_THROWS_AS(json::read_solution(json::parse(R"({"ring":{"kind":"exotic32"}})")), Error);
}

TEST_CASE("store appends canonical records once") {
  const auto path = fresh_path("dedupe");
  {
    SolutionStore store(path);
    CHECK(store.records().empty());
    CHECK(store.append(cubes()));
    auto shuffled = cubes();
    shuffled.solution.v = {BigInt(3), BigInt(4), BigInt(2)};
    CHECK_FALSE(store.append(shuffled));
    CHECK(store.records().size() == 1);
    CHECK(store.records()[0].solution.v == (Elements{BigInt(2), BigInt(3), BigInt(4)}));
  }
  {
    SolutionStore again(path);
    CHECK(again.records().size() == 1);
    CHECK_FALSE(again.append(cubes()));
  }
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1);
  fs::remove(path);
}

TEST_CASE("store rejects a malformed line") {
  const auto path = fresh_path("bad");
  {
    std::ofstream out(path);
    out << json::to_json(cubes()).dump() << "\n{oops\n";
  }
  CHECK_THROWS_AS(SolutionStore{path}, Error);
  fs::remove(path);
}

TEST_CASE("store path resolution") {
  CHECK(resolve_store_path("given.jsonl") == fs::path("given.jsonl"));
  ::setenv(kStoreEnvVar, "/tmp/from_env.jsonl", 1);
  CHECK(resolve_store_path("") == fs::path("/tmp/from_env.jsonl"));
  CHECK(resolve_store_path("given.jsonl") == fs::path("given.jsonl"));
  ::unsetenv(kStoreEnvVar);
  CHECK(resolve_store_path("") == fs::path(kDefaultStorePath));
}
