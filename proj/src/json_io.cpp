#include "polyadica/json_io.hpp"

#include "polyadica/error.hpp"

namespace polyadica::json {

Json big(const BigInt& x) { return to_string(x); }

BigInt read_big(const Json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  throw Error(ErrorCode::kParse, "expected an integer or decimal string, got " + j.dump());
}

Json big_list(const Elements& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(big(x));
  return arr;
}

Elements read_big_list(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array, got " + j.dump());
  Elements out;
  for (const auto& x : j) out.push_back(read_big(x));
  return out;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int read_int(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const RingDescriptor& d) {
  Json j;
  j["kind"] = std::string(to_string(d.kind));
  if (d.kind == RingKind::kCongruence) {
    j["a"] = d.a;
    j["b"] = d.b;
  }
  return j;
}

RingDescriptor read_descriptor(const Json& j) {
  RingDescriptor d;
  if (j.is_string()) {
    d.kind = parse_ring_kind(j.get<std::string>());
  } else {
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) throw Error(ErrorCode::kParse, "ring kind must be a string");
    d.kind = parse_ring_kind(kind.get<std::string>());
  }
  if (d.kind == RingKind::kCongruence) {
    d.a = read_int(j, "a");
    d.b = read_int(j, "b");
  }
  return d;
}

Json to_json(const SolutionRecord& r) {
  Json j;
  j["ring"] = to_json(r.ring);
  j["l"] = r.l;
  j["p"] = r.p;
  j["q"] = r.q;
  j["u"] = big_list(r.solution.u);
  j["v"] = big_list(r.solution.v);
  if (r.sum) j["sum"] = big(*r.sum);
  return j;
}

SolutionRecord read_solution(const Json& j) {
  SolutionRecord r;
  r.ring = read_descriptor(field(j, "ring"));
  r.l = read_int(j, "l");
  r.p = read_int(j, "p");
  r.q = read_int(j, "q");
  r.solution.u = read_big_list(field(j, "u"));
  r.solution.v = read_big_list(field(j, "v"));
  if (j.contains("sum")) r.sum = read_big(j.at("sum"));
  return r;
}

Json to_json(const te::MultigradeSolution& s) {
  Json j;
  j["left"] = big_list(s.left);
  j["right"] = big_list(s.right);
  j["degree"] = s.degree;
  return j;
}

te::MultigradeSolution read_multigrade(const Json& j) {
  te::MultigradeSolution s;
  s.left = read_big_list(field(j, "left"));
  s.right = read_big_list(field(j, "right"));
  s.degree = te::verify_degree(s.left, s.right);
  return s;
}

Json to_json(const shape::ShapeError& e) {
  Json j;
  j["error"] = std::string(shape::to_string(e.kind));
  j["relation"] = e.relation;
  j["detail"] = e.detail;
  return j;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace polyadica::json
