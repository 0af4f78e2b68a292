#include "polyadica/solution_store.hpp"

#include <cstdlib>

#include "polyadica/error.hpp"

namespace polyadica {

std::filesystem::path resolve_store_path(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv(kStoreEnvVar); env != nullptr && *env != '\0') return env;
  return kDefaultStorePath;
}

std::string SolutionStore::key(const json::SolutionRecord& r) {
  json::Json j;
  j["ring"] = json::to_json(r.ring);
  j["l"] = r.l;
  j["p"] = r.p;
  j["q"] = r.q;
  j["u"] = json::big_list(r.solution.u);
  j["v"] = json::big_list(r.solution.v);
  return j.dump();
}

SolutionStore::SolutionStore(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        auto rec = json::read_solution(json::parse(line));
        if (index_.insert(key(rec)).second) records_.push_back(std::move(rec));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw Error(ErrorCode::kInvalidArgument, "cannot open store " + path_.string());
}

bool SolutionStore::append(json::SolutionRecord record) {
  record.solution = canonicalize(std::move(record.solution), record.p == record.q);
  if (!index_.insert(key(record)).second) return false;
  out_ << json::to_json(record).dump() << '\n';
  out_.flush();
  records_.push_back(std::move(record));
  return true;
}

}  // namespace polyadica
