#include "qapfn/fetch.hpp"

#include <fstream>
#include <openssl/evp.h>
#include <sstream>

#include "httplib.h"

namespace qapfn {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw error("sha256: cannot allocate digest context");
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw error("sha256: digest computation failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

namespace {

struct split_url {
  std::string host;  // scheme://host[:port]
  std::string path;  // leading prefix, no trailing slash
};

split_url parse_base_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw network_failure("fetch: base url needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  split_url out;
  if (path_start == std::string::npos) {
    out.host = url;
  } else {
    out.host = url.substr(0, path_start);
    out.path = url.substr(path_start);
    while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  }
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw error("fetch: cannot write " + p.string());
}

}  // namespace

fetch_manifest fetch_instances(const std::vector<std::string>& names,
                               const fetch_options& opts) {
  fetch_manifest manifest;
  if (names.empty()) return manifest;

  fs::create_directories(opts.destination);
  const auto url = parse_base_url(opts.base_url);
  httplib::Client cli(url.host);
  cli.set_connection_timeout(opts.timeout_seconds);
  cli.set_read_timeout(opts.timeout_seconds);

  std::vector<std::string> missing;

  auto verify_checksum = [&](const std::string& file, const std::string& body) {
    const auto it = opts.checksums.find(file);
    if (it == opts.checksums.end()) return;
    const auto got = sha256_hex(body);
    if (got != it->second)
      throw checksum_mismatch("fetch: sha256 mismatch for " + file + ": expected " +
                              it->second + ", got " + got);
  };

  // returns empty body on 404, throws on transport errors
  auto get = [&](const std::string& file, bool* found) -> std::string {
    const auto res = cli.Get(url.path + "/" + file);
    if (!res)
      throw network_failure("fetch: " + opts.base_url + "/" + file + ": " +
                            httplib::to_string(res.error()));
    if (res->status == 404) {
      *found = false;
      return {};
    }
    if (res->status != 200)
      throw network_failure("fetch: " + opts.base_url + "/" + file + ": http status " +
                            std::to_string(res->status));
    *found = true;
    return res->body;
  };

  for (const auto& name : names) {
    fetch_entry entry;
    entry.name = name;
    const std::string dat_name = name + ".dat";
    const std::string sln_name = name + ".sln";
    entry.dat_path = opts.destination / dat_name;

    if (fs::exists(entry.dat_path)) {
      entry.from_cache = true;
    } else {
      bool found = false;
      const auto body = get(dat_name, &found);
      if (!found) {
        missing.push_back(name);
        continue;
      }
      verify_checksum(dat_name, body);
      write_file(entry.dat_path, body);
    }
    // verify by re-parsing; a broken cached file is re-fetched once
    try {
      (void)parse_instance_text(read_file(entry.dat_path), name);
    } catch (const error&) {
      if (!entry.from_cache) throw;
      bool found = false;
      const auto body = get(dat_name, &found);
      if (!found) {
        missing.push_back(name);
        continue;
      }
      verify_checksum(dat_name, body);
      write_file(entry.dat_path, body);
      (void)parse_instance_text(read_file(entry.dat_path), name);
      entry.from_cache = false;
    }

    const fs::path sln_path = opts.destination / sln_name;
    if (fs::exists(sln_path)) {
      entry.sln_path = sln_path;
    } else {
      bool found = false;
      const auto body = get(sln_name, &found);
      if (found) {
        verify_checksum(sln_name, body);
        write_file(sln_path, body);
        entry.sln_path = sln_path;
      } else if (opts.require_solution) {
        missing.push_back(name + " (solution)");
        continue;
      }
    }
    if (!entry.sln_path.empty())
      (void)parse_solution_text(read_file(entry.sln_path));

    manifest.entries.push_back(std::move(entry));
  }

  if (!missing.empty()) {
    std::string msg = "fetch: not found on mirror:";
    for (const auto& m : missing) msg += " " + m;
    throw not_found(msg);
  }
  return manifest;
}

}  // namespace qapfn
