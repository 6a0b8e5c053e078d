#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qapfn/instance.hpp"

namespace qapfn {

// Environment variables honoured by the fetcher and the CLI's instance
// resolution chain.
inline constexpr const char* mirror_env_var = "QAPFN_MIRROR_URL";
inline constexpr const char* data_dir_env_var = "QAPFN_DATA_DIR";

struct fetch_options {
  // e.g. "http://host:port/base/path"; <name>.dat and <name>.sln are appended.
  std::string base_url;
  std::filesystem::path destination;
  // optional hex sha256 per file name ("chr12a.dat" -> digest); verified when present
  std::map<std::string, std::string> checksums;
  int timeout_seconds = 30;
  bool require_solution = false;  // missing .sln is tolerated by default
};

struct fetch_entry {
  std::string name;
  std::filesystem::path dat_path;
  std::filesystem::path sln_path;  // empty when absent
  bool from_cache = false;
};

struct fetch_manifest {
  std::vector<fetch_entry> entries;
};

// Downloads <name>.dat (+ .sln when available) for each name into destination,
// skipping files already present (idempotent), verifying every file by
// re-parsing and, when a checksum is supplied, by sha256.
fetch_manifest fetch_instances(const std::vector<std::string>& names,
                               const fetch_options& opts);

std::string sha256_hex(const std::string& bytes);

}  // namespace qapfn
