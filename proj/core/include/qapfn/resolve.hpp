#pragma once

#include <optional>

#include "qapfn/fetch.hpp"

namespace qapfn {

struct resolved_instance {
  instance inst;
  std::optional<reference_solution> reference;
  std::filesystem::path dat_path;
};

// Where benchmark data is looked for, in order: the caller's dirs, then
// $QAPFN_DATA_DIR, then ./data/qaplib and ../data/qaplib relative to the
// working directory.
std::vector<std::filesystem::path> default_data_dirs(
    const std::vector<std::filesystem::path>& extra = {});

// Resolve a bare instance name or a .dat path. Bare names walk the data dirs;
// when not found and $QAPFN_MIRROR_URL is set, a fetch into the first usable
// directory is attempted. A sibling .sln is loaded when present. Throws
// not_found listing everything that was tried.
resolved_instance resolve_instance(const std::string& name_or_path,
                                   const std::vector<std::filesystem::path>& dirs = {});

}  // namespace qapfn
