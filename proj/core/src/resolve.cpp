#include "qapfn/resolve.hpp"

#include <cstdlib>

namespace qapfn {

namespace fs = std::filesystem;

std::vector<fs::path> default_data_dirs(const std::vector<fs::path>& extra) {
  std::vector<fs::path> dirs = extra;
  if (const char* env = std::getenv(data_dir_env_var); env && *env)
    dirs.emplace_back(env);
  dirs.emplace_back("data/qaplib");
  dirs.emplace_back("../data/qaplib");
  return dirs;
}

namespace {

resolved_instance load_pair(const fs::path& dat, const std::string& name) {
  resolved_instance out;
  out.inst = load_instance_file(dat.string());
  if (!name.empty()) out.inst.name = name;
  out.dat_path = dat;
  fs::path sln = dat;
  sln.replace_extension(".sln");
  if (fs::exists(sln)) out.reference = load_solution_file(sln.string());
  return out;
}

}  // namespace

resolved_instance resolve_instance(const std::string& name_or_path,
                                   const std::vector<fs::path>& dirs) {
  // explicit path?
  if (name_or_path.find('/') != std::string::npos ||
      name_or_path.ends_with(".dat")) {
    if (fs::exists(name_or_path)) return load_pair(name_or_path, "");
    throw not_found("instance file does not exist: " + name_or_path);
  }

  std::string tried;
  for (const auto& dir : default_data_dirs(dirs)) {
    const fs::path dat = dir / (name_or_path + ".dat");
    if (fs::exists(dat)) return load_pair(dat, name_or_path);
    tried += "\n  " + dat.string();
  }

  if (const char* mirror = std::getenv(mirror_env_var); mirror && *mirror) {
    fetch_options opts;
    opts.base_url = mirror;
    // first caller dir, else the env data dir, else the in-repo default
    const auto chain = default_data_dirs(dirs);
    opts.destination = chain.front();
    fetch_instances({name_or_path}, opts);
    const fs::path dat = opts.destination / (name_or_path + ".dat");
    return load_pair(dat, name_or_path);
  }

  throw not_found("instance '" + name_or_path + "' not found; tried:" + tried +
                  "\n  (set " + std::string(data_dir_env_var) +
                  " to a directory with .dat files, or " +
                  std::string(mirror_env_var) + " to fetch from a mirror)");
}

}  // namespace qapfn
