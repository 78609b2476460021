#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asdim/error.hpp"
#include "asdim/serialize.hpp"

namespace asdim::cli {

enum ExitCode : int {
  kOk = 0,
  kCertificateFailed = 1,
  kUsageError = 2,
  kPreconditionFailed = 3,
  kInsufficientData = 4,
};

int exit_code_for(const Error& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string sha256_hex(const std::string& data);

// Budget ceiling from ASDIM_MAX_NODES, if set.
std::uint64_t cap_budget(std::uint64_t requested);

// Collects emitted files and writes a manifest listing each with its digest.
class Manifest {
 public:
  Manifest(std::string command, Json config);
  void add_file(const std::string& path, const std::string& content);
  void add_certificate(const std::string& name, const TransportCertificate& cert);
  void set_timings(Json timings) { timings_ = std::move(timings); }
  std::string render() const;

 private:
  std::string command_;
  Json config_;
  Json files_ = Json::array();
  Json certificates_ = Json::array();
  Json timings_;
};

// Writes `content` to `path` and records it.
void emit(Manifest& manifest, const std::string& path, const std::string& content);

}  // namespace asdim::cli
