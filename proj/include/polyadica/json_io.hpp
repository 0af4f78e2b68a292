#pragma once

// JSON forms of descriptors, solutions and multigrades. Big integers are
// written as decimal strings; readers accept strings or JSON integers.

#include <json.hpp>

#include "polyadica/arity_shape.hpp"
#include "polyadica/diophantine.hpp"
#include "polyadica/ring.hpp"
#include "polyadica/tarry_escott.hpp"

namespace polyadica::json {

using Json = nlohmann::ordered_json;

Json big(const BigInt& x);
BigInt read_big(const Json& j);  // throws Error(kParse)
Json big_list(const Elements& xs);
Elements read_big_list(const Json& j);

Json to_json(const RingDescriptor& d);
RingDescriptor read_descriptor(const Json& j);

struct SolutionRecord {
  RingDescriptor ring;
  int l = 1;
  int p = 0;
  int q = 1;
  PowerSumSolution solution;
  std::optional<BigInt> sum;

  bool operator==(const SolutionRecord&) const = default;
};

Json to_json(const SolutionRecord& r);
SolutionRecord read_solution(const Json& j);

Json to_json(const te::MultigradeSolution& s);
te::MultigradeSolution read_multigrade(const Json& j);  // degree is recomputed

Json to_json(const shape::ShapeError& e);

// Parses one JSON document; throws Error(kParse) with the parser message.
Json parse(std::string_view text);

}  // namespace polyadica::json
