#pragma once

// Append-only JSON-lines store of power-sum solutions with an in-memory
// dedupe index. Single writer; every append is flushed before returning.

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "polyadica/json_io.hpp"

namespace polyadica {

inline constexpr const char* kDefaultStorePath = "polyadica_store.jsonl";
inline constexpr const char* kStoreEnvVar = "POLYADICA_STORE";

// Explicit path wins, then $POLYADICA_STORE, then the default file name.
std::filesystem::path resolve_store_path(const std::string& explicit_path);

class SolutionStore {
 public:
  // Loads existing records; throws Error(kParse) on a malformed line.
  explicit SolutionStore(std::filesystem::path path);

  // Canonicalizes and appends; returns false when the record is already stored.
  bool append(json::SolutionRecord record);

  const std::vector<json::SolutionRecord>& records() const noexcept { return records_; }
  const std::filesystem::path& path() const noexcept { return path_; }

  static std::string key(const json::SolutionRecord& record);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::set<std::string> index_;
  std::vector<json::SolutionRecord> records_;
};

}  // namespace polyadica
